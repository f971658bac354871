class DiscriminantUserWarning(UserWarning):
    pass
