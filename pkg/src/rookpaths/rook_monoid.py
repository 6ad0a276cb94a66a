"""Injective partial maps of {1..n} and the planar upper triangular rook monoid.

An injective partial map sends a subset of {1..n} one-to-one into {1..n}.
The maps that are both order preserving (a < b implies f(a) < f(b)) and order
decreasing (f(a) <= a) form a monoid under composition; its elements are
exactly the upper triangular rook matrices under the usual matrix encoding.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain, combinations
from typing import Iterator

from .exact_math import IntMatrix


@dataclass(frozen=True)
class PartialInjection:
    """Injective partial map of {1..n}, stored as sorted (source, image) pairs."""

    n: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(s), int(i)) for s, i in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"ambient size must be a positive integer, got {self.n!r}")
        sources = [s for s, _ in pairs]
        images = [i for _, i in pairs]
        for v in chain(sources, images):
            if not 1 <= v <= self.n:
                raise ValueError(f"entry {v} outside 1..{self.n}")
        if any(a >= b for a, b in zip(sources, sources[1:])):
            raise ValueError(f"sources must be strictly increasing, got {sources}")
        if len(set(images)) != len(images):
            raise ValueError(f"images must be pairwise distinct, got {images}")

    @property
    def sources(self) -> tuple[int, ...]:
        return tuple(s for s, _ in self.pairs)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(i for _, i in self.pairs)

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def __repr__(self) -> str:
        return f"PartialInjection({self.n}, {format_two_line(self)!r})"


def identity_map(n: int) -> PartialInjection:
    """The identity map of {1..n}."""
    if n < 1:
        raise ValueError(f"ambient size must be positive, got {n}")
    return PartialInjection(n, tuple((i, i) for i in range(1, n + 1)))


def zero_map(n: int) -> PartialInjection:
    """The map with empty domain and range; absorbing for composition."""
    if n < 1:
        raise ValueError(f"ambient size must be positive, got {n}")
    return PartialInjection(n, ())


def compose(f: PartialInjection, g: PartialInjection) -> PartialInjection:
    """The composite x -> f(g(x)), defined where g(x) lies in the domain of f."""
    if f.n != g.n:
        raise ValueError(f"ambient sizes differ: {f.n} vs {g.n}")
    fm = f.as_dict()
    pairs = tuple((x, fm[y]) for x, y in g.pairs if y in fm)
    return PartialInjection(f.n, pairs)


def is_order_preserving(f: PartialInjection) -> bool:
    """True iff images increase strictly along the sorted sources."""
    imgs = f.images
    return all(a < b for a, b in zip(imgs, imgs[1:]))


def is_order_decreasing(f: PartialInjection) -> bool:
    """True iff every image is at most its source."""
    return all(i <= s for s, i in f.pairs)


def to_rook_matrix(f: PartialInjection) -> IntMatrix:
    """n x n 0/1 matrix with a 1 in row i, column j exactly when f(j) = i."""
    rows = [[0] * f.n for _ in range(f.n)]
    for src, img in f.pairs:
        rows[img - 1][src - 1] = 1
    return IntMatrix(tuple(tuple(r) for r in rows))


def format_two_line(f: PartialInjection) -> str:
    """Two-line text form "s1 s2 ... / i1 i2 ..."; the zero map prints as "/"."""
    left = " ".join(str(s) for s in f.sources)
    right = " ".join(str(i) for i in f.images)
    return f"{left} / {right}".strip()


def parse_two_line(text: str, n: int) -> PartialInjection:
    """Parse the two-line text form back into a map of {1..n}.

    The image slot "x" marks an undefined source (the display form that lists
    the whole of 1..n on top), and such pairs are dropped.
    """
    if text.count("/") != 1:
        raise ValueError(f"two-line text needs exactly one '/', got {text!r}")
    left, _, right = text.partition("/")
    source_tokens = left.split()
    image_tokens = right.split()
    if len(source_tokens) != len(image_tokens):
        raise ValueError(
            f"{len(source_tokens)} sources but {len(image_tokens)} images in {text!r}"
        )
    pairs = []
    for s_tok, i_tok in zip(source_tokens, image_tokens):
        if i_tok in ("x", "X"):
            continue
        try:
            pairs.append((int(s_tok), int(i_tok)))
        except ValueError:
            raise ValueError(f"bad token pair {s_tok!r}/{i_tok!r} in {text!r}") from None
    return PartialInjection(n, tuple(pairs))


def _images_below(sources: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    # All strictly increasing tuples (r_1 < ... < r_k) with r_i <= sources[i],
    # in lexicographic order.
    k = len(sources)

    def rec(i: int, lo: int) -> Iterator[tuple[int, ...]]:
        if i == k:
            yield ()
            return
        for v in range(lo, sources[i] + 1):
            for rest in rec(i + 1, v + 1):
                yield (v, *rest)

    return rec(0, 1)


def enumerate_icn(n: int, max_n: int = 10) -> list[PartialInjection]:
    """All order preserving, order decreasing maps of {1..n}.

    Such a map is determined by its domain D and range R, equal-size subsets
    with R dominated by D componentwise; the sorted bijection between them is
    the map.  Output is ordered by (sources, images) lexicographically.
    """
    if not 1 <= n <= max_n:
        raise ValueError(f"n must be within 1..{max_n}, got {n}")
    domains = sorted(
        chain.from_iterable(combinations(range(1, n + 1), k) for k in range(n + 1))
    )
    out = []
    for dom in domains:
        for img in _images_below(dom):
            out.append(PartialInjection(n, tuple(zip(dom, img))))
    return out
