from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator
from pydantic.functional_serializers import PlainSerializer
from pydantic.functional_validators import PlainValidator
from pydantic.json_schema import WithJsonSchema
from typing_extensions import Annotated

from .exact import as_exact
from .riordan import NamedTriangle
from .sequences import TailRule
from .totalpos import parse_order


def render_scalar(value: Fraction) -> Union[int, str]:
    """Integers stay integers; other rationals become "p/q" in lowest terms."""
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"


Scalar = Annotated[
    Fraction,
    PlainValidator(as_exact),
    PlainSerializer(render_scalar),
    WithJsonSchema({"anyOf": [{"type": "integer"}, {"type": "string", "pattern": r"^[+-]?\d+(/\d+)?$"}]}),
]


class OutputFormat(str, Enum):
    PLAIN = "plain"
    CSV = "csv"
    JSON = "json"


class CheckSubject(str, Enum):
    TP = "tp"
    TP2 = "tp2"
    JACOBI_TP = "jacobi-tp"
    JACOBI_TP2 = "jacobi-tp2"
    LOGCONVEX_COL0 = "logconvex-col0"
    LOGCONCAVE_ROWS = "logconcave-rows"
    PF = "pf"
    HANKEL = "hankel"


class SpecRequest(BaseModel):
    """A triangle chosen by registry name, by Z/A prefixes, or as R(a,b;s,t)."""

    name: Optional[NamedTriangle] = None
    z: Optional[List[Scalar]] = None
    a: Optional[List[Scalar]] = None
    tail: TailRule = TailRule.ZERO
    params: Optional[List[Scalar]] = None
    rows: Optional[int] = Field(default=None, ge=1)
    window: Optional[int] = Field(default=None, ge=1)
    force: bool = False


class GenRequest(SpecRequest):
    pass


class CheckRequest(SpecRequest):
    subject: CheckSubject
    order: Optional[Union[int, str]] = None
    seq: Optional[List[Scalar]] = None

    @field_validator("order")
    @classmethod
    def _order(cls, value):
        if value is None:
            return None
        return parse_order(value)


class CatalanLikeRequest(BaseModel):
    params: List[Scalar]
    count: int = Field(ge=1)


class OutputDocument(BaseModel):
    schema_version: int = Field(default=1, alias="schema")
    command: str
    parameters: Dict[str, Any]
    result: Dict[str, Any]

    model_config = ConfigDict(populate_by_name=True)
