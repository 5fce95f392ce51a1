import random

import numpy as np
import pytest


class NaiveField:
    """Independent reference arithmetic on coefficient tuples, used as the
    oracle for the int-coded field contexts.

    Deliberately written from the definitions (schoolbook product, explicit
    reduction, inverse by exhaustive search) so it shares no code with the
    production path.
    """

    def __init__(self, q, modulus):
        self.q = q
        self.modulus = list(modulus)
        self.e = len(modulus) - 1

    def from_int(self, code):
        digits = []
        for _ in range(self.e):
            digits.append(code % self.q)
            code //= self.q
        return tuple(digits)

    def to_int(self, coeffs):
        out = 0
        for d in reversed(coeffs):
            out = out * self.q + d
        return out

    def add(self, a, b):
        return tuple((x + y) % self.q for x, y in zip(a, b))

    def mul(self, a, b):
        q, e = self.q, self.e
        prod = [0] * (2 * e - 1) if e > 1 else [0]
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % q
        for i in range(len(prod) - 1, e - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(e):
                    prod[i - e + j] = (prod[i - e + j] - c * self.modulus[j]) % q
        return tuple(prod[:e])

    def pow(self, a, n):
        out = tuple([1] + [0] * (self.e - 1))
        for _ in range(n):
            out = self.mul(out, a)
        return out

    def inv(self, a):
        one = tuple([1] + [0] * (self.e - 1))
        for code in range(1, self.q**self.e):
            cand = self.from_int(code)
            if self.mul(a, cand) == one:
                return cand
        raise ZeroDivisionError


@pytest.fixture
def rng():
    return random.Random(0xC0DE)


@pytest.fixture
def nprng():
    return np.random.Generator(np.random.PCG64(0xC0DE))
