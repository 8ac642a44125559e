"""Pure-Python versions of the inner loops; used when the extension is absent."""


def apply_images(images, w):
    out = []
    for a in w:
        out.extend(images[a - 1])
    return tuple(out)


def max_deviation(w, nums, denom, shift=0):
    """max over letters i and prefixes of |nums[i]*(l - shift) - denom*count_i(l)|.

    ``l`` runs over prefix lengths 1..len(w).
    """
    d = len(nums)
    counts = [0] * d
    best = 0
    for l, a in enumerate(w, 1):
        counts[a - 1] += 1
        t = l - shift
        for i in range(d):
            dev = nums[i] * t - denom * counts[i]
            if dev < 0:
                dev = -dev
            if dev > best:
                best = dev
    return best


def balance(w, d):
    n = len(w)
    best = 0
    for i in range(1, d + 1):
        prefix = [0] * (n + 1)
        c = 0
        for k, a in enumerate(w):
            if a == i:
                c += 1
            prefix[k + 1] = c
        if c == 0 or c == n:
            continue
        for length in range(1, n):
            lo = hi = prefix[length]
            for s in range(1, n - length + 1):
                x = prefix[s + length] - prefix[s]
                if x < lo:
                    lo = x
                elif x > hi:
                    hi = x
            if hi - lo > best:
                best = hi - lo
    return best
