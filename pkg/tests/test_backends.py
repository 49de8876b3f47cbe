"""Compiled and pure kernels must be interchangeable, result for result."""

import os
import subprocess
import sys

import pytest

from boolhood import _backend
from boolhood import _kernels_py as pure

from _oracles import random_cover
import random

compiled = pytest.importorskip(
    "boolhood._kernels", reason="compiled kernels not built on this install")


def sample_masks(count=120, max_p=6, seed=2024):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        p = rng.randint(1, max_p)
        out.append((random_cover(rng, p).masks, p))
    # the corner cases every implementation trips over eventually
    out.append(((0b1,), 1))
    out.append(((0b11,), 2))
    out.append(((0b01, 0b10), 2))
    out.append((tuple(1 << i for i in range(6)), 6))
    out.append(((0b111111,), 6))
    return out


class TestSelection:
    def test_active_backend_is_reported(self):
        assert _backend.BACKEND in ("compiled", "pure")
        # this file only runs when the extension exists, and nothing in the
        # suite sets the override, so the import should have preferred it
        if not os.environ.get("BOOLHOOD_PURE", ""):
            assert _backend.BACKEND == "compiled"

    def test_env_override_forces_pure(self):
        code = ("import boolhood._backend as b; "
                "print(b.BACKEND); "
                "print(b.parents_of((0b11,), 2))")
        env = dict(os.environ, BOOLHOOD_PURE="1")
        out = subprocess.run([sys.executable, "-c", code], env=env,
                             capture_output=True, text=True, check=True).stdout
        assert out.splitlines()[0] == "pure"

    def test_enumeration_is_always_the_pure_one(self):
        assert _backend.iter_antichain_covers is pure.iter_antichain_covers


class TestParity:
    @pytest.mark.parametrize("masks,p", sample_masks())
    def test_every_kernel_agrees(self, masks, p):
        assert set(compiled.minimal_transversals(masks)) == set(
            pure.minimal_transversals(masks))
        assert compiled.max_independent(masks, p) == pure.max_independent(masks, p)
        assert compiled.max_dominated(masks) == pure.max_dominated(masks)
        assert sorted(compiled.parents_of(masks, p)) == sorted(pure.parents_of(masks, p))
        assert sorted(compiled.children_of(masks, p)) == sorted(
            pure.children_of(masks, p))

    @pytest.mark.parametrize("p", [1, 2, 3, 4, 5])
    def test_counts_agree(self, p):
        assert compiled.count_antichain_covers(p) == pure.count_antichain_covers(p)

    def test_full_width_masks(self):
        # p=64 exercises the word-boundary handling in the C path
        masks = ((1 << 64) - 1,)
        assert compiled.max_dominated(masks) == pure.max_dominated(masks)
        par_c = compiled.parents_of(masks, 64)
        par_p = pure.parents_of(masks, 64)
        assert sorted(par_c) == sorted(par_p)
        assert len(par_c) == 64 * 63 // 2  # one split per facet pair
