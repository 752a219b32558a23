"""A Poissonized shuffle as a point process, and its largest part.

Run: python3 demos/04_point_process.py
"""
from collections import Counter

import numpy as np

from shufflesym import ShuffleParams, br_gap_probability, br_partition, br_shape_probability, sample_br
from shufflesym.pointprocess import PointConfig, points_to_permutation

# Points in the unit square plus points on integer levels; ties on a level
# are broken so that a positive level can hold an increasing run.
pts = [(.2, .3), (.3, .5), (.35, -8), (.4, 9), (.45, 9), (.5, 7), (.6, -2), (.7, -8)]
c = PointConfig.from_points(pts)
print("permutation read off the points:", points_to_permutation(c), "shape", br_partition(c))

gsr2 = ShuffleParams.gsr(2)
rng = np.random.default_rng(1)
samples = 20_000
shapes = Counter(br_partition(sample_br(2, gsr2, rng)) for _ in range(samples))
print(f"\nshape frequencies from {samples} draws against the exact law:")
for lam in [(), (1,), (2,), (1, 1), (3,), (2, 1)]:
    print(f"  {str(lam):8s} {shapes[lam] / samples:.4f}  {br_shape_probability(lam, 2, gsr2).value:.4f}")

largest = np.array([s[0] if s else 0 for s in shapes.elements()])
print("\nP(largest part <= n): Toeplitz determinant vs sample")
for n in range(1, 6):
    g = br_gap_probability(2, gsr2, n)
    print(f"  n={n}: {g.value:.5f} (error <= {g.error_bound:.0e})  sample {np.mean(largest <= n):.5f}")
