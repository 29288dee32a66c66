"""Fixed-seed random instance generators shared across the test suite."""

import random

from symdepth import MonomialIdeal

CORPUS_SEED = 20240817


def random_squarefree_ideal(rng, n):
    """A random proper nonzero squarefree ideal in n variables."""
    while True:
        count = rng.randint(1, n + 2)
        gens = []
        for _ in range(count):
            size = rng.randint(1, n)
            chosen = set(rng.sample(range(n), size))
            gens.append(tuple(1 if i in chosen else 0 for i in range(n)))
        ideal = MonomialIdeal.from_generators(gens, n)
        if not ideal.is_zero and ideal.is_proper:
            return ideal


def corpus(count=200, seed=CORPUS_SEED, nmax=5):
    rng = random.Random(seed)
    return [random_squarefree_ideal(rng, rng.randint(2, nmax)) for _ in range(count)]


def random_monomial(rng, n, max_degree):
    return tuple(rng.randint(0, max_degree) for _ in range(n))
