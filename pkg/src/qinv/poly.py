"""Sparse multivariate polynomials over Gaussian rationals.

Variable universe (all variables are plain tuples, which gives a fixed
total order for free: amplitude < conjugate amplitude < auxiliary):

  ('a', idx)            amplitude a_{i1...ik}, idx = int of the bitstring,
                        i1 most significant
  ('ac', idx)           conjugate amplitude
  ('x', slot, comp, copy)  auxiliary variable x^{(slot)}_comp; slot in 1..k,
                        comp in {0,1}, copy 0 = plain, 1 = primed,
                        2 = double-primed (transvection intermediates only)

A monomial is a sorted tuple of (variable, exponent) pairs with positive
exponents; a polynomial is a dict monomial -> GaussianRational with no zero
coefficients stored.  Equal polynomials therefore have equal dicts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

import numpy as np

from .gaussian import GR_ONE, GR_ZERO, GaussianRational, _coerce


def amp(idx: int) -> tuple:
    return ("a", idx)


def amp_conj(idx: int) -> tuple:
    return ("ac", idx)


def aux(slot: int, comp: int, copy: int = 0) -> tuple:
    return ("x", slot, comp, copy)


def mono_mul(m1: tuple, m2: tuple) -> tuple:
    """Merge two sorted monomials, adding exponents."""
    if not m1:
        return m2
    if not m2:
        return m1
    out = []
    i = j = 0
    n1, n2 = len(m1), len(m2)
    while i < n1 and j < n2:
        v1, e1 = m1[i]
        v2, e2 = m2[j]
        if v1 == v2:
            out.append((v1, e1 + e2))
            i += 1
            j += 1
        elif v1 < v2:
            out.append(m1[i])
            i += 1
        else:
            out.append(m2[j])
            j += 1
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out)


class DimensionError(ValueError):
    """Operands live over different ambient qubit counts."""


class EvaluationError(KeyError):
    """A variable could not be resolved during numeric evaluation."""


class Polynomial:
    """Exact sparse polynomial; immutable by convention (never mutate terms)."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: Mapping[tuple, GaussianRational] | None = None):
        self.k = k
        self.terms = dict(terms) if terms else {}

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, k: int) -> "Polynomial":
        return cls(k)

    @classmethod
    def constant(cls, k: int, c) -> "Polynomial":
        c = _coerce(c) if not isinstance(c, GaussianRational) else c
        if not c:
            return cls(k)
        return cls(k, {(): c})

    @classmethod
    def variable(cls, k: int, var: tuple, coeff=1) -> "Polynomial":
        c = _coerce(coeff) if not isinstance(coeff, GaussianRational) else coeff
        if not c:
            return cls(k)
        return cls(k, {((var, 1),): c})

    # -- ring operations --------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.k != other.k:
            raise DimensionError(f"ambient k mismatch: {self.k} vs {other.k}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = Polynomial.constant(self.k, other)
        self._check(other)
        big, small = (self.terms, other.terms)
        if len(big) < len(small):
            big, small = small, big
        out = dict(big)
        for m, c in small.items():
            s = out.get(m, GR_ZERO) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial(self.k, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.k, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = Polynomial.constant(self.k, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            c = _coerce(other) if not isinstance(other, GaussianRational) else other
            if not c:
                return Polynomial(self.k)
            return Polynomial(self.k, {m: v * c for m, v in self.terms.items()})
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = mono_mul(m1, m2)
                c = c1 * c2
                s = out.get(m)
                s = c if s is None else s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial(self.k, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.k, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = Polynomial.constant(self.k, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def __hash__(self):
        return hash((self.k, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- calculus / conjugation -------------------------------------------

    def partial(self, var: tuple) -> "Polynomial":
        """Formal partial derivative with respect to one variable."""
        out = {}
        for m, c in self.terms.items():
            for i, (v, e) in enumerate(m):
                if v == var:
                    if e == 1:
                        nm = m[:i] + m[i + 1:]
                    else:
                        nm = m[:i] + ((v, e - 1),) + m[i + 1:]
                    nc = c * e
                    s = out.get(nm, GR_ZERO) + nc
                    if s:
                        out[nm] = s
                    else:
                        out.pop(nm, None)
                    break
        return Polynomial(self.k, out)

    def conjugate(self) -> "Polynomial":
        """Swap a <-> conj(a) and conjugate coefficients; aux vars unchanged.

        Rejects transvection intermediates (primed copies must never leak).
        """
        out = {}
        for m, c in self.terms.items():
            nm = []
            for v, e in m:
                if v[0] == "a":
                    nm.append((("ac", v[1]), e))
                elif v[0] == "ac":
                    nm.append((("a", v[1]), e))
                else:
                    if v[3] != 0:
                        raise ValueError("cannot conjugate transvection intermediate")
                    nm.append((v, e))
            nm.sort()
            out[tuple(nm)] = c.conjugate()
        return Polynomial(self.k, out)

    # -- inspection -------------------------------------------------------

    def amp_degree(self) -> int:
        """Max total degree in amplitude variables over all monomials."""
        best = 0
        for m in self.terms:
            d = sum(e for v, e in m if v[0] == "a")
            best = max(best, d)
        return best

    def aux_multidegree(self) -> tuple:
        """Max degree per auxiliary slot over all monomials."""
        deg = [0] * self.k
        for m in self.terms:
            cur = [0] * self.k
            for v, e in m:
                if v[0] == "x":
                    cur[v[1] - 1] += e
            for j in range(self.k):
                deg[j] = max(deg[j], cur[j])
        return tuple(deg)

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    # -- numeric evaluation -----------------------------------------------

    def evaluate(self, state: "State", aux_assignment: Mapping | None = None) -> complex:
        """Evaluate at a numeric state; aux_assignment maps (slot, comp) -> complex."""
        if state.k != self.k:
            raise DimensionError(f"ambient k mismatch: {self.k} vs {state.k}")
        amps = state.amplitudes
        total = 0j
        for m, c in self.terms.items():
            val = complex(c)
            for v, e in m:
                if v[0] == "a":
                    base = amps[v[1]]
                elif v[0] == "ac":
                    base = amps[v[1]].conjugate()
                else:
                    if aux_assignment is None:
                        raise EvaluationError(f"unresolved auxiliary variable {v}")
                    try:
                        base = aux_assignment[(v[1], v[2])]
                    except KeyError:
                        raise EvaluationError(f"unresolved auxiliary variable {v}") from None
                val *= base ** e if e > 1 else base
            total += val
        return total

    def batch_evaluator(self):
        """Compile an auxiliary-free polynomial into a vectorized evaluator.

        Returns a callable mapping an (n, 2^k) complex amplitude array to an
        n-vector of values; much faster than `evaluate` in a loop when the
        same polynomial is evaluated on many states.
        """
        dim = 2 ** self.k
        coeffs = np.empty(len(self.terms), dtype=complex)
        exp_a = np.zeros((len(self.terms), dim), dtype=np.int64)
        exp_c = np.zeros((len(self.terms), dim), dtype=np.int64)
        for t, (m, c) in enumerate(self.terms.items()):
            coeffs[t] = complex(c)
            for v, e in m:
                if v[0] == "a":
                    exp_a[t, v[1]] = e
                elif v[0] == "ac":
                    exp_c[t, v[1]] = e
                else:
                    raise EvaluationError(
                        "batch evaluation requires an auxiliary-free polynomial"
                    )
        used_a = np.flatnonzero(exp_a.any(axis=0))
        used_c = np.flatnonzero(exp_c.any(axis=0))
        expected_k = self.k

        def run(amps: np.ndarray) -> np.ndarray:
            a = np.asarray(amps, dtype=complex)
            single = a.ndim == 1
            if single:
                a = a[None, :]
            if a.shape[1] != dim:
                raise DimensionError(
                    f"expected {dim} amplitudes (k={expected_k}), got {a.shape[1]}"
                )
            acc = np.broadcast_to(coeffs, (a.shape[0], len(coeffs))).copy()
            conj = a.conj()
            for v in used_a:
                acc *= a[:, v:v + 1] ** exp_a[None, :, v]
            for v in used_c:
                acc *= conj[:, v:v + 1] ** exp_c[None, :, v]
            out = acc.sum(axis=1)
            return out[0] if single else out

        return run

    # -- printing ---------------------------------------------------------

    def __repr__(self):
        return f"Polynomial(k={self.k}, {len(self.terms)} terms)"

    def pretty(self) -> str:
        """Deterministic human-readable form: sorted monomials, exact coefficients."""
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            factors = []
            for v, e in m:
                if v[0] == "a":
                    name = f"a[{format(v[1], f'0{self.k}b')}]"
                elif v[0] == "ac":
                    name = f"ac[{format(v[1], f'0{self.k}b')}]"
                else:
                    prime = "" if v[3] == 0 else "'" * v[3]
                    name = f"x{v[1]}{prime}_{v[2]}"
                factors.append(name if e == 1 else f"{name}^{e}")
            mono = "*".join(factors) if factors else "1"
            parts.append(f"({c!r})*{mono}")
        return " + ".join(parts)


@dataclass(frozen=True)
class State:
    """Numeric pure k-qubit state: 2^k amplitudes in bitstring order (i1 MSB)."""

    k: int
    amplitudes: tuple

    def __post_init__(self):
        if len(self.amplitudes) != 2 ** self.k:
            raise DimensionError(
                f"expected {2 ** self.k} amplitudes for k={self.k}, "
                f"got {len(self.amplitudes)}"
            )
        object.__setattr__(
            self, "amplitudes", tuple(complex(a) for a in self.amplitudes)
        )

    @classmethod
    def from_vector(cls, vec: Iterable[complex]) -> "State":
        vec = list(vec)
        k = int(round(np.log2(len(vec))))
        return cls(k, tuple(vec))

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalized(self) -> "State":
        n = self.norm()
        if n == 0:
            raise ValueError("cannot normalize the zero state")
        return State(self.k, tuple(a / n for a in self.amplitudes))

    def to_json_obj(self) -> dict:
        return {
            "k": self.k,
            "amplitudes": [[a.real, a.imag] for a in self.amplitudes],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "State":
        k = int(obj["k"])
        amps = [complex(re, im) for re, im in obj["amplitudes"]]
        return cls(k, tuple(amps))

    @classmethod
    def load(cls, path: str) -> "State":
        with open(path) as fh:
            return cls.from_json_obj(json.load(fh))

    def save(self, path: str):
        with open(path, "w") as fh:
            json.dump(self.to_json_obj(), fh)


def ghz(k: int, normalized: bool = True) -> State:
    amps = [0j] * 2 ** k
    c = 1 / np.sqrt(2) if normalized else 1.0
    amps[0] = c
    amps[-1] = c
    return State(k, tuple(amps))


def w_state(k: int, normalized: bool = True) -> State:
    amps = [0j] * 2 ** k
    c = 1 / np.sqrt(k) if normalized else 1.0
    for j in range(k):
        amps[1 << j] = c
    return State(k, tuple(amps))


def basis_state(k: int, index: int) -> State:
    amps = [0j] * 2 ** k
    amps[index] = 1.0
    return State(k, tuple(amps))


def random_state(k: int, rng: np.random.Generator, normalized: bool = True) -> State:
    vec = rng.normal(size=2 ** k) + 1j * rng.normal(size=2 ** k)
    if normalized:
        vec = vec / np.linalg.norm(vec)
    return State(k, tuple(vec))
