"""Sparse symmetric functions with coefficients in Z[t]."""

from __future__ import annotations

from typing import Iterable, Mapping

from .partitions import Partition, lex_key_desc, partition
from .tpoly import ONE, TPoly, ZERO

Terms = dict  # Partition -> TPoly, never holding a zero value


def add_into(acc: Terms, src: Mapping[Partition, TPoly], coeff: TPoly | int | None = None) -> Terms:
    """``acc += coeff * src`` in place, dropping cancelled terms."""
    if coeff is not None:
        if isinstance(coeff, int):
            coeff = TPoly.const(coeff)
        if not coeff:
            return acc
        if coeff.c == (1,):
            coeff = None
    for key, v in src.items():
        if coeff is not None:
            v = v * coeff
        old = acc.get(key)
        if old is None:
            acc[key] = v
        else:
            nv = old + v
            if nv.c:
                acc[key] = nv
            else:
                del acc[key]
    return acc


def add_unit(acc: Terms, key: Partition, coeff: TPoly) -> None:
    old = acc.get(key)
    if old is None:
        acc[key] = coeff
    else:
        nv = old + coeff
        if nv.c:
            acc[key] = nv
        else:
            del acc[key]


class SymFunc:
    """A finite linear combination of basis elements indexed by partitions.

    ``basis`` is a tag such as ``"s"``, ``"m"``, ``"h"``, ``"H"``, ``"G(3)"``
    or ``"kschur(3)"``.  Values are immutable by convention: nothing in the
    package mutates ``terms`` after construction.
    """

    __slots__ = ("basis", "terms")

    def __init__(self, terms: Mapping | Iterable | None = None, basis: str = "s"):
        self.basis = basis
        d: Terms = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for lam, c in items:
                lam = partition(lam)
                add_unit(d, lam, TPoly.coerce(c))
        self.terms = d

    @classmethod
    def wrap(cls, terms: Terms, basis: str = "s") -> "SymFunc":
        """Adopt an already clean dictionary without copying."""
        obj = object.__new__(cls)
        obj.basis = basis
        obj.terms = terms
        return obj

    @classmethod
    def basis_element(cls, lam, basis: str = "s", coeff: TPoly | int = 1) -> "SymFunc":
        return cls({tuple(lam): coeff}, basis)

    @classmethod
    def one(cls, basis: str = "s") -> "SymFunc":
        return cls.wrap({(): ONE}, basis)

    @classmethod
    def zero(cls, basis: str = "s") -> "SymFunc":
        return cls.wrap({}, basis)

    # -- arithmetic ---------------------------------------------------
    def _check(self, other: "SymFunc"):
        if not isinstance(other, SymFunc):
            raise TypeError("expected a SymFunc")
        if other.basis != self.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")

    def __add__(self, other):
        self._check(other)
        return SymFunc.wrap(add_into(dict(self.terms), other.terms), self.basis)

    def __sub__(self, other):
        self._check(other)
        return SymFunc.wrap(add_into(dict(self.terms), other.terms, -ONE), self.basis)

    def __neg__(self):
        return SymFunc.wrap({k: -v for k, v in self.terms.items()}, self.basis)

    def scale(self, c: TPoly | int) -> "SymFunc":
        c = TPoly.coerce(c)
        if not c:
            return SymFunc.zero(self.basis)
        return SymFunc.wrap({k: v * c for k, v in self.terms.items()}, self.basis)

    def __mul__(self, c):
        if isinstance(c, (int, TPoly)):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def shift_t(self, k: int) -> "SymFunc":
        return SymFunc.wrap({lam: v.shift(k) for lam, v in self.terms.items()}, self.basis)

    def at_t_one(self) -> "SymFunc":
        d: Terms = {}
        for lam, v in self.terms.items():
            n = v.eval_at_one()
            if n:
                d[lam] = TPoly.const(n)
        return SymFunc.wrap(d, self.basis)

    def map_coefficients(self, fn) -> "SymFunc":
        d: Terms = {}
        for lam, v in self.terms.items():
            w = fn(v)
            if w:
                d[lam] = w
        return SymFunc.wrap(d, self.basis)

    def relabel(self, basis: str) -> "SymFunc":
        return SymFunc.wrap(self.terms, basis)

    # -- inspection ---------------------------------------------------
    def coefficient(self, lam) -> TPoly:
        return self.terms.get(tuple(lam), ZERO)

    def __getitem__(self, lam) -> TPoly:
        return self.coefficient(lam)

    def support(self) -> list[Partition]:
        return sorted(self.terms, key=lambda p: (sum(p), lex_key_desc(p)))

    def items(self):
        """Terms ordered by degree, then descending lex."""
        for lam in self.support():
            yield lam, self.terms[lam]

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degrees(self) -> set[int]:
        return {sum(lam) for lam in self.terms}

    def homogeneous_components(self) -> dict[int, "SymFunc"]:
        out: dict[int, Terms] = {}
        for lam, v in self.terms.items():
            out.setdefault(sum(lam), {})[lam] = v
        return {n: SymFunc.wrap(d, self.basis) for n, d in sorted(out.items())}

    def is_integral_constant(self) -> bool:
        return all(v.is_const() for v in self.terms.values())

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    # -- serialisation ------------------------------------------------
    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [{"partition": list(lam), "coeff": v.to_json()} for lam, v in self.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SymFunc":
        return cls(((tuple(t["partition"]), TPoly.from_json(t["coeff"])) for t in data["terms"]), data["basis"])

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for lam, v in self.items():
            idx = ",".join(map(str, lam)) if lam else ""
            name = f"{self.basis}[{idx}]"
            if v == ONE:
                out.append(name)
            elif v == -ONE:
                out.append(f"-{name}")
            elif len([a for a in v.c if a]) == 1:
                out.append(f"{v.pretty()}·{name}")
            else:
                out.append(f"({v.pretty()})·{name}")
        return " + ".join(out).replace("+ -", "- ")

    def __repr__(self):
        return f"SymFunc<{self.basis}>({self.pretty()})"
