from enum import Enum


class _StrEnum(str, Enum):
    def __str__(self) -> str:
        return self.value

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.value})"


class Family(_StrEnum):
    BINOMIAL = "binomial"
    TRINOMIAL = "trinomial"
    K2 = "k2"
    K3 = "k3"
    K_N_MINUS_1 = "knm1"
    RECIP_N2 = "recip2"
    RECIP_N3 = "recip3"
    TWO_N = "two_n"
    OTAKE_SHASKA = "os"


class Method(_StrEnum):
    CLOSED_FORM_BINOMIAL = "CLOSED_FORM_BINOMIAL"
    CLOSED_FORM_TRINOMIAL = "CLOSED_FORM_TRINOMIAL"
    CLOSED_FORM_CUBIC = "CLOSED_FORM_CUBIC"
    CLOSED_FORM_QUARTIC_K3 = "CLOSED_FORM_QUARTIC_K3"
    CLOSED_FORM_K2 = "CLOSED_FORM_K2"
    CLOSED_FORM_K3 = "CLOSED_FORM_K3"
    CLOSED_FORM_K_N_MINUS_1 = "CLOSED_FORM_K_N_MINUS_1"
    CLOSED_FORM_RECIP_N2 = "CLOSED_FORM_RECIP_N2"
    CLOSED_FORM_RECIP_N3 = "CLOSED_FORM_RECIP_N3"
    CLOSED_FORM_OTAKE_SHASKA = "CLOSED_FORM_OTAKE_SHASKA"
    PIPELINE_TWO_N = "PIPELINE_TWO_N"
    ORACLE_SYLVESTER = "ORACLE_SYLVESTER"
    ORACLE_PRS = "ORACLE_PRS"

    @property
    def is_oracle(self) -> bool:
        return self in (Method.ORACLE_SYLVESTER, Method.ORACLE_PRS)


class MethodChoice(_StrEnum):
    AUTO = "auto"
    FORMULA = "formula"
    ORACLE = "oracle"
    BOTH = "both"


class OutputFormat(_StrEnum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


class Command(_StrEnum):
    DISC = "disc"
    COMPARE = "compare"
    FUZZ = "fuzz"
    BENCH = "bench"


class ExitCode(int, Enum):
    OK = 0
    MISMATCH = 1
    USAGE = 2
