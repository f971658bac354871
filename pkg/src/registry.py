from typing import TYPE_CHECKING, Callable

from src.constants import Family

if TYPE_CHECKING:
    from src.config import FamilyInput
    from src.resultant.discriminant import DiscriminantResult


ClosedForm = Callable[["FamilyInput"], "DiscriminantResult"]


closed_forms: dict[Family, ClosedForm] = {}


def register_closed_form(family: Family, closed_form: ClosedForm):
    family = Family(family)
    if family in closed_forms:
        raise RuntimeError(f"closed form for {str(family)!r} already registered")
    closed_forms[family] = closed_form
