from typing import Any, Mapping, Optional

import marshmallow

from src.constants import Method
from src.error import ParseError
from src.exact.gaussian import GaussianRational
from src.poly.parser import parse_polynomial
from src.poly.polynomial import Polynomial
from src.resultant.discriminant import DiscriminantResult


class GaussianRationalField(marshmallow.fields.Field):
    """Gaussian rational kept in its canonical text form, e.g. ``"2-3/4i"``."""

    default_error_messages = {"invalid": "Not a valid Gaussian rational: {reason}."}

    def _serialize(self, value: Any, attr: Optional[str], obj: Any, **kwargs) -> Optional[str]:
        if value is None:
            return None
        return str(GaussianRational.coerce(value))

    def _deserialize(
        self, value: Any, attr: Optional[str], data: Optional[Mapping[str, Any]], **kwargs
    ) -> GaussianRational:
        if isinstance(value, int) and not isinstance(value, bool):
            return GaussianRational(value)
        if not isinstance(value, str):
            raise self.make_error("invalid", reason="expected a string")
        try:
            return GaussianRational.parse(value)
        except ParseError as error:
            raise self.make_error("invalid", reason=error.message) from error


class PolynomialField(marshmallow.fields.Field):
    default_error_messages = {"invalid": "Not a valid polynomial: {reason}."}

    def _serialize(self, value: Any, attr: Optional[str], obj: Any, **kwargs) -> Optional[str]:
        if value is None:
            return None
        return str(value)

    def _deserialize(
        self, value: Any, attr: Optional[str], data: Optional[Mapping[str, Any]], **kwargs
    ) -> Polynomial:
        if not isinstance(value, str):
            raise self.make_error("invalid", reason="expected a string")
        try:
            return parse_polynomial(value)
        except ParseError as error:
            raise self.make_error("invalid", reason=error.message) from error


class DiscriminantResultSchema(marshmallow.Schema):
    """
    The JSON document printed by ``sparsedisc disc --format json``. Loading returns the
    ``DiscriminantResult``; the ``input`` polynomial is validated and dropped.
    """

    input = PolynomialField(load_default=None)
    method = marshmallow.fields.Enum(Method, by_value=True, required=True)
    value = GaussianRationalField(required=True)
    sign_exponent_audit = marshmallow.fields.Integer(required=True)

    @marshmallow.post_load
    def _post_load(self, data: dict[str, Any], **_) -> DiscriminantResult:
        return DiscriminantResult(
            value=data["value"],
            method=data["method"],
            sign_exponent_audit=data["sign_exponent_audit"],
        )


def dump_result(result: DiscriminantResult, f: Optional[Polynomial] = None) -> dict[str, Any]:
    payload = {
        "input": f,
        "method": result.method,
        "value": result.value,
        "sign_exponent_audit": result.sign_exponent_audit,
    }
    return DiscriminantResultSchema().dump(payload)
