"""SplitMix64, the fixed generator behind every seeded choice.

State update and output mix follow Vigna's reference splitmix64.c, so a
seed reproduces the same stream in any language.
"""

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int = 0):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        return mix64(self.state)

    def bits(self, k: int) -> int:
        """k uniform bits, k <= 64."""
        return self.next_u64() >> (64 - k) if k else 0

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        k = (bound - 1).bit_length()
        while True:
            x = self.bits(k)
            if x < bound:
                return x

    def nonzero(self, n: int) -> int:
        """Uniform nonzero n-bit value."""
        while True:
            x = self.bits(n)
            if x:
                return x

    def fork(self, index: int) -> "SplitMix64":
        """Independent stream for trial ``index`` (seed xor index, remixed)."""
        return SplitMix64(mix64(self.state ^ index))


def trial_rng(seed: int, trial: int) -> SplitMix64:
    return SplitMix64(mix64((seed ^ trial) & MASK64))
