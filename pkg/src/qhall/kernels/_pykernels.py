"""Pure-Python reference kernels for dense integer convolution."""

BACKEND = "python"


def conv(a, b):
    """Full convolution of two dense integer coefficient lists."""
    la, lb = len(a), len(b)
    if la == 0 or lb == 0:
        return []
    out = [0] * (la + lb - 1)
    for i in range(la):
        ai = a[i]
        if ai:
            for j in range(lb):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
    return out


def conv_trunc(a, b, keep):
    """First `keep` coefficients of conv(a, b); the rest are discarded."""
    la, lb = len(a), len(b)
    if la == 0 or lb == 0 or keep <= 0:
        return []
    n = min(keep, la + lb - 1)
    out = [0] * n
    for i in range(min(la, n)):
        ai = a[i]
        if ai:
            jmax = min(lb, n - i)
            for j in range(jmax):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
    return out
