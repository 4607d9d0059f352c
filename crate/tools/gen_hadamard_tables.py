#!/usr/bin/env python3
"""Generate the embedded base Hadamard tables for exq-core.

Orders and constructions:
  Paley I  (q = 3 mod 4, order q + 1):      12, 20, 44, 60, 108, 140
  Paley II (q = 1 mod 4, order 2(q + 1)):    28, 36, 52, 76
  Sylvester doubling of Paley I order 20:    40
  Goethals-Seidel array of four circulants:  156 (n = 39), 172 (n = 43)

The Goethals-Seidel sequences were found by a meet-in-the-middle search over
unions of multiplier orbits in Z_n; they are frozen below.

Each matrix is written row-major as a hex string, one bit per entry,
bit set = -1, most significant bit first within each byte.

Usage: python3 tools/gen_hadamard_tables.py > crates/core/src/hadamard/tables.rs
"""

import numpy as np

GS_SEQUENCES = {
    39: [
        "+---+-+++-++++-+-++-++-++++---+--++-+++",
        "-+--+-+---+-+++++++--++++++--++--+-++-+",
        "-+----+-----+++++-+--++-+-+--++--+-++--",
        "--++++---++--+---+-+-+-++++++--+++----+",
    ],
    43: [
        "---+-+++-++-++++-++++--++++-++++-++-+++-+--",
        "+-----++-++--+++-++----++++-++++--+-+-+-+--",
        "+-----++-++--+++-++----++++-++++--+-+-+-+--",
        "+-+----+++---+++-++---+--++++++-+-+-+--+--+",
    ],
}


class Field:
    """GF(p) or GF(p^2) with elements encoded as integers a + b*p."""

    def __init__(self, p, k):
        self.p, self.k, self.q = p, k, p**k
        if k == 2:
            squares = {(x * x) % p for x in range(1, p)}
            self.r = next(x for x in range(2, p) if x not in squares)

    def sub(self, x, y):
        p = self.p
        if self.k == 1:
            return (x - y) % p
        return ((x % p - y % p) % p) + ((x // p - y // p) % p) * p

    def mul(self, x, y):
        p = self.p
        if self.k == 1:
            return (x * y) % p
        a, b, c, d = x % p, x // p, y % p, y // p
        return ((a * c + b * d * self.r) % p) + ((a * d + b * c) % p) * p

    def chi(self, x):
        if x == 0:
            return 0
        e, acc, base = (self.q - 1) // 2, 1, x
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return 1 if acc == 1 else -1


def jacobsthal(field):
    q = field.q
    return np.array([[field.chi(field.sub(j, i)) for j in range(q)] for i in range(q)], dtype=np.int64)


def paley1(p, k=1):
    f = Field(p, k)
    q = f.q
    assert q % 4 == 3
    s = np.zeros((q + 1, q + 1), dtype=np.int64)
    s[0, 1:] = 1
    s[1:, 0] = -1
    s[1:, 1:] = jacobsthal(f)
    return np.eye(q + 1, dtype=np.int64) + s


def paley2(p, k=1):
    f = Field(p, k)
    q = f.q
    assert q % 4 == 1
    c = np.zeros((q + 1, q + 1), dtype=np.int64)
    c[0, 1:] = 1
    c[1:, 0] = 1
    c[1:, 1:] = jacobsthal(f)
    return np.kron(c, np.array([[1, 1], [1, -1]])) + np.kron(
        np.eye(q + 1, dtype=np.int64), np.array([[1, -1], [-1, -1]])
    )


def circulant(seq):
    a = np.array([1 if ch == "+" else -1 for ch in seq], dtype=np.int64)
    n = len(a)
    return np.array([[a[(j - i) % n] for j in range(n)] for i in range(n)], dtype=np.int64)


def goethals_seidel(n):
    a, b, c, d = (circulant(s) for s in GS_SEQUENCES[n])
    r = np.fliplr(np.eye(n, dtype=np.int64))
    return np.block(
        [
            [a, b @ r, c @ r, d @ r],
            [-b @ r, a, d.T @ r, -c.T @ r],
            [-c @ r, -d.T @ r, a, b.T @ r],
            [-d @ r, c.T @ r, -b.T @ r, a],
        ]
    )


def build():
    mats = {
        12: paley1(11),
        20: paley1(19),
        28: paley2(13),
        36: paley2(17),
        40: np.kron(np.array([[1, 1], [1, -1]]), paley1(19)),
        44: paley1(43),
        52: paley2(5, 2),
        60: paley1(59),
        76: paley2(37),
        108: paley1(107),
        140: paley1(139),
        156: goethals_seidel(39),
        172: goethals_seidel(43),
    }
    for order, h in mats.items():
        assert h.shape == (order, order)
        assert set(np.unique(h)) <= {-1, 1}
        assert np.array_equal(h @ h.T, order * np.eye(order, dtype=np.int64)), order
    return mats


def to_hex(h):
    bits = (h.flatten() < 0).astype(np.uint8)
    pad = (-len(bits)) % 8
    bits = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)])
    return np.packbits(bits).tobytes().hex()


def main():
    mats = build()
    print("// Generated by tools/gen_hadamard_tables.py. Do not edit.")
    print("//")
    print("// Row-major sign bits, one bit per entry (set = -1), MSB first.")
    print()
    print("pub(crate) static BASE_TABLES: &[(usize, &str)] = &[")
    for order, h in mats.items():
        hx = to_hex(h)
        print(f"    (")
        print(f"        {order},")
        chunks = [hx[i : i + 80] for i in range(0, len(hx), 80)]
        print('        concat!(')
        for ch in chunks:
            print(f'            "{ch}",')
        print("        ),")
        print("    ),")
    print("];")


if __name__ == "__main__":
    main()
