"""Request and response schemas for the HTTP service.

Arbitrary-precision integers travel as decimal strings end to end; exponent
and order components use the same quaternion literal syntax as the CLI
("2", "0.5", "1+2i", "i+j-k").
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field, field_validator

from ..hyper import parse_quaternion

Parity = Literal["odd", "even", "all"]
VariantName = Literal["exact", "floored", "ceiled"]


def _check_literal(value: str) -> str:
    parse_quaternion(value)  # raises ValueError on bad syntax
    return value


class OrderModel(BaseModel):
    under: str = "1"
    upper: str = "1"

    _v_under = field_validator("under")(_check_literal)
    _v_upper = field_validator("upper")(_check_literal)


class SigmaRequest(BaseModel):
    n: str = Field(description="positive integer, decimal string")
    exponent: str = "1"

    _v_exp = field_validator("exponent")(_check_literal)

    @field_validator("n")
    @classmethod
    def _positive(cls, v: str) -> str:
        if int(v) < 1:
            raise ValueError("n must be >= 1")
        return v


class QuaternionModel(BaseModel):
    a: float
    b: float = 0.0
    c: float = 0.0
    d: float = 0.0


class SigmaResponse(BaseModel):
    n: str
    exponent: str
    exact: bool
    value: Optional[str] = None
    quaternion: Optional[QuaternionModel] = None


class ClassifyRequest(BaseModel):
    n: str
    order: OrderModel = OrderModel()
    variant: VariantName = "exact"

    @field_validator("n")
    @classmethod
    def _positive(cls, v: str) -> str:
        if int(v) < 1:
            raise ValueError("n must be >= 1")
        return v


class ClassificationModel(BaseModel):
    n: str
    factorization: str
    verdict: str
    alpha1: str
    alpha2: str
    omega: int
    tau: int
    variant: str
    boundary: bool


class ManifestModel(BaseModel):
    command: str
    parameters: dict[str, str]
    tool_version: str
    duration_ms: int
    result_digest: str


class RecordModel(BaseModel):
    n: str
    factorization: list[list]
    sigma: str
    alpha1: str
    alpha2: str
    omega: int
    tau: int
    verdict: str
    variant: str
    boundary: bool
    order: dict[str, str]


class EnumerateRequest(BaseModel):
    bound: int = Field(ge=2)
    order: OrderModel = OrderModel()
    classes: list[str] = ["strong", "weak", "very-weak"]
    parity: Parity = "all"


class EnumerateResponse(BaseModel):
    records: list[RecordModel]
    manifest: ManifestModel


class CountRequest(BaseModel):
    bound: int = Field(ge=2)
    order: OrderModel = OrderModel()
    parity: Parity = "all"


class CountResponse(BaseModel):
    bound: str
    parity: Parity
    strong: int
    weak: int
    very_weak: int
    not_alpha: int


class SearchOddRequest(BaseModel):
    bound: int = Field(ge=9)
    cross_check: bool = True


class SearchOddResponse(BaseModel):
    bound: str
    found: list[RecordModel]
    methods_agree: Optional[bool] = None
    manifest: ManifestModel


class VerifyRequest(BaseModel):
    theorem: str
    bound: int = Field(ge=3)


class VerifyResponse(BaseModel):
    theorem: str
    bound: str
    checked: int
    passed: bool
    counterexample: Optional[str] = None
    detail: str


class AuditRowModel(BaseModel):
    table: str
    row: str
    status: str
    claimed: dict[str, str]
    computed: dict[str, str]
    discrepancy: str


class AuditResponse(BaseModel):
    rows: list[AuditRowModel]
    mismatches: int
    manifest: ManifestModel


class HealthResponse(BaseModel):
    status: str
    version: str
