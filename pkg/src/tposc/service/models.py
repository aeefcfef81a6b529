"""Pydantic request/response models and their exact-rational conversions.

Rationals travel as strings ("p/q" or an integer string); matrices as
{"n": ..., "entries": [[...], ...]}; factorizations carry a diagonal, a
signed word (negative = lower elementary factor) and one positive
parameter per letter.
"""
from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, Field

from ..tpmatrix import FactorizationInput, RationalMatrix

RationalIn = Union[str, int]

CheckMode = Literal["tnn", "tp", "osc", "cell", "minpow"]
SuiteName = Literal["dodgson", "gk", "gp", "coxeter", "lemma-c"]


class MatrixPayload(BaseModel):
    n: int
    entries: list[list[RationalIn]]

    def to_matrix(self) -> RationalMatrix:
        return RationalMatrix.from_json_dict(self.model_dump())


class FactorizationPayload(BaseModel):
    n: int
    diag: list[RationalIn]
    word: list[int]
    params: list[RationalIn]

    def to_factorization(self) -> FactorizationInput:
        return FactorizationInput.from_json_dict(self.model_dump())


class MgRequest(BaseModel):
    type: str
    witness: bool = False
    per_permutation: bool = False
    jobs: int = Field(default=1, ge=1)


class MgReport(BaseModel):
    type: str
    m: int
    witness: Optional[list[int]] = None
    permutations_checked: int
    elapsed_ms: int
    per_permutation_min: Optional[list[dict]] = None


class CheckRequest(BaseModel):
    matrix: MatrixPayload
    mode: CheckMode
    cap: Optional[int] = Field(default=None, ge=1)


class FactorRequest(BaseModel):
    factorization: FactorizationPayload


class VerifyRequest(BaseModel):
    suite: SuiteName
    seed: int = 0
    trials: Optional[int] = Field(default=None, ge=0)
    jobs: int = Field(default=1, ge=1)


class Report(BaseModel):
    command: str
    inputs: dict
    verdict: dict
    elapsed_ms: int
