"""Shared test utilities: seeded random DGAs built from safe moves.

Random DGAs start from a zero-differential seed and grow by
stabilizations and elementary isomorphisms, both of which preserve
validity, so every produced DGA passes the validator by construction
(and we assert as much here to fail fast if a move is broken).
"""

import random
from typing import List, Optional, Tuple

from legch.algebra import (
    DGA,
    ElementaryIso,
    apply_elementary_iso,
    assert_valid,
    canon_degree,
    stabilize,
)
from legch.augment import enumerate_augmentations


def poly(*words: Tuple[str, ...]):
    return frozenset(tuple(w) for w in words)


def random_elementary_iso(rng: random.Random, dga: DGA) -> Optional[ElementaryIso]:
    """A random generator shift q -> q + u of matching degree, if one exists."""
    target = rng.choice(dga.generators)
    others = [g for g in dga.generators if g != target]
    if not others:
        return None
    want = dga.degree(target)
    candidates = set()
    for _ in range(80):
        length = rng.randint(1, 3)
        word = tuple(rng.choice(others) for _ in range(length))
        if dga.word_degree(word) == want:
            candidates.add(word)
    if not candidates:
        return None
    pool = sorted(candidates)
    shift = frozenset(rng.sample(pool, k=min(len(pool), rng.randint(1, 2))))
    return ElementaryIso(target, shift)


def _apply_if_small(dga: DGA, iso: ElementaryIso, budget: int = 300) -> Optional[DGA]:
    """Apply the iso unless the rewritten differential would grow too large.

    Substituting q -> q + u multiplies a word's term count by (1 + |u|) per
    occurrence of q, so repeated shifts can blow up exponentially; predicting
    the growth first keeps the sampler fast, and the post-check keeps every
    accepted DGA small.
    """
    width = 1 + len(iso.shift)
    predicted = 0
    for g in dga.generators:
        for w in dga.d(g):
            predicted += width ** sum(1 for letter in w if letter == iso.target)
            if predicted > 12 * budget:
                return None
    bigger = apply_elementary_iso(dga, iso)
    if sum(len(bigger.d(g)) for g in bigger.generators) > budget:
        return None
    return bigger


def random_dga(rng: random.Random, max_gens: int = 8, moduli=(0, 0, 0, 2, 3, 4, 6)) -> DGA:
    """Seeded valid DGA with at most ``max_gens`` generators."""
    modulus = rng.choice(moduli)
    seed_count = rng.randint(1, 2)
    names = tuple("g%d" % i for i in range(seed_count))
    degrees = {n: rng.randint(-3, 3) for n in names}
    dga = DGA(modulus, names, degrees, {})
    while len(dga.generators) + 2 <= max_gens and rng.random() < 0.8:
        dga = stabilize(dga, rng.randint(-2, 3))
    for _ in range(rng.randint(2, 8)):
        iso = random_elementary_iso(rng, dga)
        if iso is not None:
            smaller = _apply_if_small(dga, iso)
            if smaller is not None:
                dga = smaller
    assert_valid(dga)
    return dga


def random_augmented_dga(rng: random.Random, max_gens: int = 8):
    """A random DGA together with one of its augmentations."""
    while True:
        dga = random_dga(rng, max_gens)
        augs = enumerate_augmentations(dga)
        if augs:
            return dga, augs[rng.randrange(len(augs))]


def random_dgas(seed: int, count: int, max_gens: int = 8) -> List[DGA]:
    rng = random.Random(seed)
    return [random_dga(rng, max_gens) for _ in range(count)]
