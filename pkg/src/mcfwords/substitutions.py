"""
Substitutions realising step matrices, under the convention that in each
image the most frequent letter comes first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .kernels import apply_images
from .lattice import Matrix, Word


@dataclass(frozen=True)
class Substitution:
    """Non-erasing morphism; ``images[j - 1]`` is the image of letter ``j``."""

    images: tuple[Word, ...]

    def __post_init__(self):
        if any(len(img) == 0 for img in self.images):
            raise ValueError("erasing substitution")

    @property
    def d(self) -> int:
        return len(self.images)

    def __call__(self, w: Sequence[int]) -> Word:
        return apply(self, w)

    def __str__(self):
        return ", ".join(
            f"{j}->{''.join(map(str, img))}" for j, img in enumerate(self.images, 1)
        )

    @classmethod
    def identity(cls, d: int) -> Substitution:
        return cls(tuple((j,) for j in range(1, d + 1)))

    @classmethod
    def parse(cls, text: str) -> Substitution:
        """Inverse of ``str``: ``"1->13, 2->2, 3->3"``."""
        images = {}
        for part in text.split(","):
            src, _, img = part.strip().partition("->")
            images[int(src)] = tuple(int(c) for c in img.strip())
        return cls(tuple(images[j] for j in range(1, len(images) + 1)))


def incidence(s: Substitution) -> Matrix:
    d = s.d
    return tuple(
        tuple(s.images[j].count(i + 1) for j in range(d)) for i in range(d)
    )


def substitution_from_matrix(m: Matrix, order_ref: Sequence) -> Substitution:
    """Substitution with incidence matrix ``m``.

    The image of ``j`` holds ``m[i][j]`` copies of each letter ``i``; copies
    are grouped, and groups appear by decreasing ``order_ref[i]`` (ties by
    increasing letter).
    """
    d = len(m)
    rank = sorted(range(d), key=lambda i: (-order_ref[i], i))
    images = []
    for j in range(d):
        img = ()
        for i in rank:
            if m[i][j]:
                img += (i + 1,) * m[i][j]
        if not img:
            raise ValueError(f"column {j + 1} of the matrix is zero")
        images.append(img)
    return Substitution(tuple(images))


def apply(s: Substitution, w: Sequence[int]) -> Word:
    return apply_images(s.images, w)


def compose(s: Substitution, t: Substitution) -> Substitution:
    """``s o t``: apply ``t`` first, then ``s``."""
    return Substitution(tuple(apply(s, img) for img in t.images))
