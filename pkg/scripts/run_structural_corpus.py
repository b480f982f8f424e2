#!/usr/bin/env python3
"""Sweep seeded complementarity instances and check the structural claims.

For each instance (random P-matrix, assorted q-vectors including heavily
degenerate ones) the partial orientation is checked to be partially
Szabo-Welzl, its unoriented regions to be disjoint hypervertex faces,
the downward completion to be a USO, and random refills of the faces to
stay USOs.
"""

import argparse
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from omcp.cube import (
    complete_downward,
    is_partially_sw,
    is_uso_exhaustive,
    mirrored_down_orientation,
    refill_hypervertex,
    unoriented_faces,
)
from omcp.plcp import random_p_matrix, random_q
from omcp.realize import RealizedOM, plcp_matrix
from omcp.reduction import klaus_orientation
from omcp.signs import GroundSet


@dataclass
class SweepConfig:
    count: int = 200
    seed: int = 0
    dims: tuple[int, ...] = (2, 3, 4)


def draw_q(m, n, style, rng):
    if style == 0:
        return tuple(Fraction(0) for _ in range(n))
    if style == 1:
        i = rng.randrange(n)
        return tuple(-m.entries[r][i] for r in range(n))
    if style == 2:
        i = rng.randrange(n)
        return tuple(Fraction(int(r == i)) for r in range(n))
    if style == 3:
        return tuple(Fraction(0) if rng.random() < 0.4 else v for v in random_q(n, rng))
    return random_q(n, rng)


def sweep(config: SweepConfig) -> dict:
    rng = random.Random(config.seed)
    degenerate_count = 0
    face_count = 0
    start = time.perf_counter()
    for k in range(config.count):
        n = config.dims[k % len(config.dims)]
        m = random_p_matrix(n, rng)
        q = draw_q(m, n, k % 5, rng)
        oracle = RealizedOM(plcp_matrix(m, q), GroundSet.complementary(n, with_q=True))
        ppu = klaus_orientation(oracle, n, partial=True).materialize()

        ok, witness = is_partially_sw(ppu)
        assert ok, f"partial Szabo-Welzl failed: {witness}"
        faces = unoriented_faces(ppu)
        assert is_uso_exhaustive(complete_downward(ppu))

        refilled = ppu
        for face in faces:
            flips = [d for d in range(face.dim) if rng.random() < 0.5]
            refilled = refill_hypervertex(
                refilled, face, mirrored_down_orientation(face.dim, flips)
            )
        assert is_uso_exhaustive(refilled)

        if faces:
            degenerate_count += 1
            face_count += len(faces)
    return {
        "instances": config.count,
        "degenerate": degenerate_count,
        "unoriented_faces": face_count,
        "seconds": round(time.perf_counter() - start, 2),
    }


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--dims", type=int, nargs="+", default=[2, 3, 4])
    args = parser.parse_args()
    stats = sweep(SweepConfig(args.count, args.seed, tuple(args.dims)))
    print(
        f"checked {stats['instances']} instances "
        f"({stats['degenerate']} degenerate, {stats['unoriented_faces']} unoriented faces) "
        f"in {stats['seconds']}s: all structural checks passed"
    )


if __name__ == "__main__":
    main()
