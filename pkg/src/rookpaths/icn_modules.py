"""Subset-indexed modules for the planar upper triangular rook monoid.

The ambient module V has one basis vector v_S per subset S of {1..n}; a
monoid element f sends v_S to v_{f(S)} when S lies inside the domain of f
and kills it otherwise.  Equal-size subsets are ordered componentwise
(written increasingly), different sizes are incomparable, and the dimension
of the cyclic module generated by v_S is the number of subsets below S,
which equals a count of lattice paths below a boundary.

Dimension routes provided:
  * dim_principal_iterative  -- height-sequence substitution into the
    iterative path count,
  * dim_principal_incl_excl  -- signed sum of binomial determinants over
    the subsets of S,
  * len(downset(S))          -- brute-force oracle,
  * dim_submodule            -- inclusion-exclusion over the reduced support
    for an arbitrary vector, with dim_submodule_oracle as its brute-force
    counterpart.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from typing import Iterator, Mapping

from .exact_math import IntMatrix, binomial, catalan, det_exact
from .lattice_paths import (
    HeightSequence,
    count_below_decreasing_iterative,
)
from .rook_monoid import PartialInjection, is_order_decreasing, is_order_preserving

MAX_INCL_EXCL_SIZE = 20
MAX_ORACLE_AMBIENT = 16


@dataclass(frozen=True)
class Subset:
    """Subset of {1..n} stored as a strictly increasing tuple (may be empty)."""

    n: int
    elems: tuple[int, ...]

    def __post_init__(self):
        elems = tuple(int(e) for e in self.elems)
        object.__setattr__(self, "elems", elems)
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"ambient size must be a positive integer, got {self.n!r}")
        for e in elems:
            if not 1 <= e <= self.n:
                raise ValueError(f"element {e} outside 1..{self.n}")
        if any(a >= b for a, b in zip(elems, elems[1:])):
            raise ValueError(f"elements must be strictly increasing, got {elems}")

    def __len__(self) -> int:
        return len(self.elems)

    def __repr__(self) -> str:
        inner = ",".join(str(e) for e in self.elems)
        return f"Subset({self.n}, {{{inner}}})"


def _subset_sort_key(s: Subset) -> tuple[int, tuple[int, ...]]:
    return (len(s.elems), s.elems)


def _check_same_ambient(a, b) -> None:
    if a.n != b.n:
        raise ValueError(f"ambient sizes differ: {a.n} vs {b.n}")


def subset_leq(t: Subset, s: Subset) -> bool:
    """Componentwise order on equal-size subsets; sizes differ means incomparable."""
    _check_same_ambient(t, s)
    if len(t.elems) != len(s.elems):
        return False
    return all(a <= b for a, b in zip(t.elems, s.elems))


def subset_meet(s: Subset, t: Subset) -> Subset:
    """Greatest lower bound of equal-size subsets: the componentwise minimum."""
    _check_same_ambient(s, t)
    if len(s.elems) != len(t.elems):
        raise ValueError("meet is defined for equal-size subsets only")
    return Subset(s.n, tuple(min(a, b) for a, b in zip(s.elems, t.elems)))


def iter_downset(s: Subset) -> Iterator[Subset]:
    """Yield every subset T <= S in ascending lexicographic order."""
    elems = s.elems
    k = len(elems)

    def rec(i: int, lo: int) -> Iterator[tuple[int, ...]]:
        if i == k:
            yield ()
            return
        for v in range(lo, elems[i] + 1):
            for rest in rec(i + 1, v + 1):
                yield (v, *rest)

    for t in rec(0, 1):
        yield Subset(s.n, t)


def downset(s: Subset) -> list[Subset]:
    """All subsets below s; its length is the brute-force dimension oracle."""
    return list(iter_downset(s))


class ModuleVector:
    """Finite formal rational combination of basis vectors v_S.

    Only nonzero coefficients are stored, so the support is structural.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Subset, object] | None = None):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"ambient size must be a positive integer, got {n!r}")
        self.n = n
        cleaned: dict[Subset, Fraction] = {}
        for subset, coeff in (terms or {}).items():
            if not isinstance(subset, Subset):
                raise ValueError(f"term key must be a Subset, got {subset!r}")
            if subset.n != n:
                raise ValueError(f"ambient sizes differ: {subset.n} vs {n}")
            value = Fraction(coeff)
            if value != 0:
                cleaned[subset] = cleaned.get(subset, Fraction(0)) + value
        self.terms = {s: c for s, c in cleaned.items() if c != 0}

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[Subset, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: _subset_sort_key(item[0]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __repr__(self) -> str:
        return f"ModuleVector({self.n}, {format_module_vector(self)!r})"


def zero_vector(n: int) -> ModuleVector:
    return ModuleVector(n)


def basis_vector(s: Subset) -> ModuleVector:
    return ModuleVector(s.n, {s: 1})


def act(f: PartialInjection, v: ModuleVector) -> ModuleVector:
    """Apply a monoid element to a vector, extended linearly over the basis.

    A term v_S survives exactly when S lies inside the domain of f, in which
    case it moves to v_{f(S)}; f must be order preserving and order decreasing.
    """
    if f.n != v.n:
        raise ValueError(f"ambient sizes differ: {f.n} vs {v.n}")
    if not (is_order_preserving(f) and is_order_decreasing(f)):
        raise ValueError("map must be order preserving and order decreasing")
    mapping = f.as_dict()
    domain = set(mapping)
    out: dict[Subset, Fraction] = {}
    for subset, coeff in v.terms.items():
        if set(subset.elems) <= domain:
            image = Subset(v.n, tuple(sorted(mapping[e] for e in subset.elems)))
            out[image] = out.get(image, Fraction(0)) + coeff
    return ModuleVector(v.n, out)


def support(v: ModuleVector) -> set[Subset]:
    """Subsets carrying a nonzero coefficient."""
    return set(v.terms)


@dataclass(frozen=True)
class SubmoduleDescriptor:
    """Canonical label of a cyclic submodule: its reduced support antichain."""

    n: int
    reduced_support: frozenset[Subset]

    def __post_init__(self):
        subsets = frozenset(self.reduced_support)
        object.__setattr__(self, "reduced_support", subsets)
        for s in subsets:
            if s.n != self.n:
                raise ValueError(f"ambient sizes differ: {s.n} vs {self.n}")
        for s in subsets:
            for t in subsets:
                if s != t and subset_leq(s, t):
                    raise ValueError(f"{s} <= {t}: reduced support must be an antichain")


def reduced_support(v: ModuleVector) -> SubmoduleDescriptor:
    """Maximal subsets of the support; equal antichains mean equal submodules."""
    supp = list(v.terms)
    maximal = frozenset(
        s for s in supp if not any(s != t and subset_leq(s, t) for t in supp)
    )
    return SubmoduleDescriptor(v.n, maximal)


def reduced_form(v: ModuleVector) -> ModuleVector:
    """Coefficient-1 sum over the reduced support; generates the same submodule."""
    return ModuleVector(v.n, {s: 1 for s in reduced_support(v).reduced_support})


def submodule_equal(v: ModuleVector, w: ModuleVector) -> bool:
    """True iff v and w generate the same submodule (same reduced support)."""
    _check_same_ambient(v, w)
    return reduced_support(v) == reduced_support(w)


def _heights_for_subset(s: Subset) -> HeightSequence:
    # lambda_i = s_{k-i+1} - (k-i+1): the gap between S and the minimum
    # k-subset {1..k}, read from the top element down.
    elems = s.elems
    k = len(elems)
    lam = tuple(elems[k - 1 - i] - (k - i) for i in range(k))
    return HeightSequence.decreasing(lam)


def dim_principal_iterative(s: Subset) -> int:
    """Dimension of the cyclic module generated by v_S, via the iterative count.

    Counts the subsets T <= S by translating S into the decreasing height
    sequence of its gaps; a singleton {s_1} gives s_1 directly, and the empty
    subset spans the one-dimensional piece F v_{} by convention.
    """
    elems = s.elems
    if len(elems) == 0:
        return 1
    if len(elems) == 1:
        return elems[0]
    return count_below_decreasing_iterative(_heights_for_subset(s))


def dim_principal_incl_excl(s: Subset) -> int:
    """Dimension of the module generated by v_S, by inclusion-exclusion.

    Sums (-1)^{|S - T|} det C(t_i + 1, j - i + 1) over all subsets T of S;
    the empty T contributes the 0x0 determinant 1.
    """
    elems = s.elems
    k = len(elems)
    if k > MAX_INCL_EXCL_SIZE:
        raise ValueError(f"subset size {k} exceeds bound {MAX_INCL_EXCL_SIZE}")
    total = 0
    for size in range(k + 1):
        for t in combinations(elems, size):
            m = IntMatrix(
                tuple(
                    tuple(binomial(t[i] + 1, j - i + 1) for j in range(size))
                    for i in range(size)
                )
            )
            total += (-1) ** (k - size) * det_exact(m)
    return total


def catalan_family_subset(k: int, n: int | None = None) -> Subset:
    """The even staircase {2, 4, ..., 2k}."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if n is None:
        n = 2 * k
    return Subset(n, tuple(2 * i for i in range(1, k + 1)))


def interval_family_subset(m: int, k: int, n: int | None = None) -> Subset:
    """The interval {m+1, ..., m+k}."""
    if m < 0 or k < 1:
        raise ValueError(f"need m >= 0 and k >= 1, got m={m}, k={k}")
    if n is None:
        n = m + k
    return Subset(n, tuple(range(m + 1, m + k + 1)))


def mixed_family_subset(k: int, m: int, n: int | None = None) -> Subset:
    """The staircase-then-interval subset {2, 4, ..., 2m, 2m+1, ..., m+k}."""
    if not 2 <= m <= k:
        raise ValueError(f"need k >= m >= 2, got k={k}, m={m}")
    elems = tuple(2 * i for i in range(1, m + 1)) + tuple(range(2 * m + 1, m + k + 1))
    if n is None:
        n = m + k
    return Subset(n, elems)


def dim_catalan_family(k: int) -> int:
    """Closed form for dim <v_{2,4,...,2k}>: the Catalan number c_{k+1}."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return catalan(k + 1)


def dim_interval_family(m: int, k: int) -> int:
    """Closed form for dim <v_{m+1,...,m+k}>: the binomial C(m+k, k)."""
    if m < 0 or k < 1:
        raise ValueError(f"need m >= 0 and k >= 1, got m={m}, k={k}")
    return binomial(m + k, k)


def dim_mixed_family(k: int, m: int) -> int:
    """Closed form for the staircase-then-interval family, valid for k >= m >= 2.

    Uses the specialized coefficient recursion
        gamma_1 = 1, gamma_2 = ... = gamma_{k-m+2} = 0, gamma_{k-m+3} = -1,
        gamma_i = -C(m-k+2i-4, i-1)
                  - sum(C(2(i-j-1), i-j) * gamma_j, j = k-m+3..i-2)
    for i >= k-m+4.
    """
    if not 2 <= m <= k:
        raise ValueError(f"need k >= m >= 2, got k={k}, m={m}")
    g = [0] * (k + 1)  # 1-indexed
    g[1] = 1
    for i in range(2, k):
        if i <= k - m + 2:
            g[i] = 0
        elif i == k - m + 3:
            g[i] = -1
        else:
            g[i] = -binomial(m - k + 2 * i - 4, i - 1) - sum(
                binomial(2 * (i - j - 1), i - j) * g[j] for j in range(k - m + 3, i - 1)
            )
    total = (
        binomial(m + k, k)
        - binomial(m + k - 2, k)
        - 2 * binomial(m + k - 4, k - 1)
    )
    total += sum(binomial(2 * (k - i + 1), k + 1 - i) * g[i] for i in range(k - m + 3, k))
    total -= sum(binomial(2 * (k - i), k + 1 - i) * g[i] for i in range(k - m + 3, k))
    total -= sum(2 * binomial(2 * (k - i - 1), k - i) * g[i] for i in range(k - m + 3, k - 1))
    return total


def dim_special(kind: str, *, k: int, m: int | None = None) -> int:
    """Dispatch to the closed-form dimension of one of the special families."""
    if kind == "catalan":
        return dim_catalan_family(k)
    if kind == "interval":
        if m is None:
            raise ValueError("interval family needs m")
        return dim_interval_family(m, k)
    if kind == "mixed":
        if m is None:
            raise ValueError("mixed family needs m")
        return dim_mixed_family(k, m)
    raise ValueError(f"unknown family {kind!r}")


def dim_submodule(v: ModuleVector) -> int:
    """Dimension of the submodule generated by v, by inclusion-exclusion.

    Sums (-1)^{|J|-1} dim <v_{S_J}> over nonempty J inside the reduced
    support, where S_J is the meet of the members of J.  A J mixing subset
    sizes meets in the zero module and contributes nothing, because the
    size-graded pieces of V intersect trivially.  The zero vector spans the
    zero module.
    """
    red = sorted(reduced_support(v).reduced_support, key=_subset_sort_key)
    total = 0
    for r in range(1, len(red) + 1):
        for chosen in combinations(red, r):
            sizes = {len(s.elems) for s in chosen}
            if len(sizes) != 1:
                continue
            meet = reduce(subset_meet, chosen)
            total += (-1) ** (r - 1) * dim_principal_iterative(meet)
    return total


def dim_submodule_oracle(v: ModuleVector) -> int:
    """Dimension of <v> as the size of the explicit union of downsets."""
    if v.n > MAX_ORACLE_AMBIENT:
        raise ValueError(f"ambient size {v.n} exceeds oracle bound {MAX_ORACLE_AMBIENT}")
    seen: set[Subset] = set()
    for s in reduced_support(v).reduced_support:
        seen.update(iter_downset(s))
    return len(seen)


def parse_module_vector(text: str, n: int) -> ModuleVector:
    """Parse the text form "coef:{e1,e2,...};..." into a vector over {1..n}.

    Coefficients are rationals like "-2" or "3/2"; "{}" denotes the empty
    subset.  Repeated subsets accumulate.  "0" (or an empty string) is the
    zero vector.
    """
    stripped = text.strip()
    if stripped in ("", "0"):
        return zero_vector(n)
    terms: dict[Subset, Fraction] = {}
    for part in stripped.split(";"):
        coeff_text, sep, set_text = part.partition(":")
        if not sep:
            raise ValueError(f"term {part!r} is missing ':'")
        try:
            coeff = Fraction(coeff_text.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"bad coefficient {coeff_text!r}") from None
        set_text = set_text.strip()
        if not (set_text.startswith("{") and set_text.endswith("}")):
            raise ValueError(f"subset {set_text!r} must be brace-delimited")
        inner = set_text[1:-1].strip()
        if inner:
            try:
                elems = tuple(int(tok) for tok in inner.split(","))
            except ValueError:
                raise ValueError(f"bad subset {set_text!r}") from None
        else:
            elems = ()
        subset = Subset(n, elems)
        terms[subset] = terms.get(subset, Fraction(0)) + coeff
    return ModuleVector(n, terms)


def format_module_vector(v: ModuleVector) -> str:
    """Inverse of parse_module_vector, with terms ordered by (size, elements)."""
    if v.is_zero():
        return "0"
    parts = []
    for subset, coeff in v.sorted_terms():
        inner = ",".join(str(e) for e in subset.elems)
        parts.append(f"{coeff}:{{{inner}}}")
    return ";".join(parts)
