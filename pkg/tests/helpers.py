import math

import numpy as np

from lctbank import Signal

T_EXAMPLE = 0.05
HAAR = np.array([1.0, 1.0]) / math.sqrt(2.0)
FOUR_PEAKS = [30 * math.pi / 512, 100 * math.pi / 512, 412 * math.pi / 512, 482 * math.pi / 512]


def random_signal(rng, length, start=0, period=T_EXAMPLE):
    return Signal(rng.normal(size=length) + 1j * rng.normal(size=length), start, period)


def grid_points(count, span=2 * math.pi):
    return np.arange(count) * span / count
