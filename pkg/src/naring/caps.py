import os

DEFAULT_GLOBAL_CAP = 1 << 20
IDEAL_ENUM_CAP = 4096
TRIPLE_SCAN_CAP = 1024
PAIR_SCAN_CAP = 4096
SUBSET_SCAN_ORDER_CAP = 16
SUBRING_ENUM_CAP = 256
GENERATOR_CAP = 2
LATTICE_NODE_CAP = 128
LATTICE_NODE_CAP_STRONG = 64


class CapExceeded(Exception):
    """An exhaustive operation would exceed its configured cap."""

    def __init__(self, what, size, cap):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: size {size} exceeds cap {cap}")


def global_cap(override=None):
    # precedence: explicit argument > NARING_CAP env > default
    if override is not None:
        return int(override)
    env = os.environ.get("NARING_CAP")
    if env is not None:
        return int(env)
    return DEFAULT_GLOBAL_CAP


def require(what, size, cap):
    if size > cap:
        raise CapExceeded(what, size, cap)
