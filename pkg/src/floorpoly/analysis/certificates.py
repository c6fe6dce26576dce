"""Witness certificates, verdicts and their JSON form."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from ..errors import CertificateError


@dataclass(frozen=True)
class NonUdWitness:
    """floor(P(k)) over one period mod ``modulus`` lands in ``heavy_class``
    ``count`` times, with ``count * modulus > period``."""

    p: int
    modulus: int
    heavy_class: int
    count: int
    period: int
    poly: str
    a: int | None = None

    type = "nonud"

    def to_json(self) -> dict:
        out = {"type": self.type, "p": self.p, "modulus": self.modulus}
        if self.a is not None:
            out["a"] = self.a
        out.update(
            {"class": self.heavy_class, "count": self.count, "period": self.period, "poly": self.poly}
        )
        return out


@dataclass(frozen=True)
class IncompletenessWitness:
    """No k in 1..period has floor(P(k)) == missing_class (mod p)."""

    p: int
    missing_class: int
    period: int
    poly: str

    type = "incomplete"

    def to_json(self) -> dict:
        return {
            "type": self.type,
            "p": self.p,
            "class": self.missing_class,
            "period": self.period,
            "poly": self.poly,
        }


@dataclass(frozen=True)
class RunWitness:
    """t, t+1, ..., t+l-1 are all nth power non-residues mod p."""

    p: int
    n: int
    t: int
    l: int

    type = "run"

    @property
    def period(self) -> int:
        return self.p

    def to_json(self) -> dict:
        return {
            "type": self.type,
            "p": self.p,
            "t": self.t,
            "l": self.l,
            "n": self.n,
            "period": self.p,
            "poly": "",
        }


Certificate = NonUdWitness | IncompletenessWitness | RunWitness

_REQUIRED = {
    "nonud": ("p", "modulus", "class", "count", "period", "poly"),
    "incomplete": ("p", "class", "period", "poly"),
    "run": ("p", "t", "l", "n", "period"),
}
_INT_FIELDS = ("p", "modulus", "a", "class", "count", "t", "l", "n", "period")


def certificate_from_json(data) -> Certificate:
    """Parse a certificate dict, raising CertificateError on structural problems."""
    if isinstance(data, (NonUdWitness, IncompletenessWitness, RunWitness)):
        return data
    if not isinstance(data, dict):
        raise CertificateError("certificate must be a JSON object")
    kind = data.get("type")
    if kind not in _REQUIRED:
        raise CertificateError(f"unknown certificate type {kind!r}")
    missing = [k for k in _REQUIRED[kind] if k not in data]
    if missing:
        raise CertificateError(f"{kind} certificate lacks fields: {', '.join(missing)}")
    for k in _INT_FIELDS:
        if k in data and data[k] is not None:
            v = data[k]
            if not isinstance(v, int) or isinstance(v, bool):
                raise CertificateError(f"field {k!r} must be an integer")
    if "poly" in data and not isinstance(data["poly"], str):
        raise CertificateError("field 'poly' must be a string")
    if kind == "nonud":
        return NonUdWitness(
            p=data["p"],
            modulus=data["modulus"],
            heavy_class=data["class"],
            count=data["count"],
            period=data["period"],
            poly=data["poly"],
            a=data.get("a"),
        )
    if kind == "incomplete":
        return IncompletenessWitness(
            p=data["p"], missing_class=data["class"], period=data["period"], poly=data["poly"]
        )
    if data["period"] != data["p"]:
        raise CertificateError("run certificate period must equal p")
    return RunWitness(p=data["p"], n=data["n"], t=data["t"], l=data["l"])


class VerdictKind(str, enum.Enum):
    UD_IN_Z = "UdInZ"
    NOT_UD = "NotUd"
    COMPLETE_IN_Z = "CompleteInZ"
    INCOMPLETE = "Incomplete"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Budget:
    max_prime: int = 10**5
    max_anchor: int = 10**4
    max_period: int = 10**7
    factor_bound: int = 10**6

    def to_dict(self) -> dict:
        return {
            "max_prime": self.max_prime,
            "max_anchor": self.max_anchor,
            "max_period": self.max_period,
            "factor_bound": self.factor_bound,
        }


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    reason: str
    certificate: Certificate | None = None
    budget: dict | None = None
    degenerate: bool = False
    notes: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind in (VerdictKind.NOT_UD, VerdictKind.INCOMPLETE) and self.certificate is None:
            raise ValueError(f"{self.kind.value} verdict requires a certificate")
        if self.kind is VerdictKind.UNKNOWN and self.budget is None:
            raise ValueError("Unknown verdict requires the exhausted budget")

    @property
    def is_unknown(self) -> bool:
        return self.kind is VerdictKind.UNKNOWN

    def to_dict(self) -> dict:
        out = {"kind": self.kind.value, "reason": self.reason}
        out["certificate"] = self.certificate.to_json() if self.certificate else None
        if self.budget is not None:
            out["budget"] = self.budget
        if self.degenerate:
            out["degenerate"] = True
        return out
