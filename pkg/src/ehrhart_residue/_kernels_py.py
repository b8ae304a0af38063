"""Pure-Python counting kernels (fallback for the compiled ``_kernels``).

Each kernel returns ``(count, iterations)``; a count of ``-1`` means the
iteration budget was exhausted before the enumeration finished.
"""


def count_weighted(weights, cap, lower, max_iter):
    """Count m with m_k >= lower and sum(w_k * m_k) <= cap by nested loops."""
    n = len(weights)
    if cap < 0:
        return 0, 0
    # shift to m_k >= 0
    cap -= lower * sum(weights)
    if cap < 0:
        return 0, 0
    iters = 0
    count = 0
    stack = [(0, cap)]
    while stack:
        depth, rem = stack.pop()
        w = weights[depth]
        if depth == n - 1:
            top = rem // w + 1
            iters += top
            count += top
            if iters > max_iter:
                return -1, iters
            continue
        for m in range(rem // w + 1):
            iters += 1
            stack.append((depth + 1, rem - m * w))
        if iters > max_iter:
            return -1, iters
    return count, iters


def count_box(rows, rhs, bounds, max_iter):
    """Count integer x in prod([0, bounds_k]) with rows[j] . x <= rhs[j] for all j."""
    n = len(bounds)
    total = 1
    for b in bounds:
        total *= b + 1
    if total > max_iter:
        return -1, 0
    count = 0
    x = [0] * n
    iters = 0
    while True:
        iters += 1
        ok = True
        for row, r in zip(rows, rhs):
            s = 0
            for k in range(n):
                s += row[k] * x[k]
            if s > r:
                ok = False
                break
        if ok:
            count += 1
        k = 0
        while k < n:
            if x[k] < bounds[k]:
                x[k] += 1
                break
            x[k] = 0
            k += 1
        if k == n:
            break
    return count, iters


def count_denumerant(weights, target, max_iter):
    """Number of nonnegative solutions of sum(w_k m_k) + m = target (coin-change DP)."""
    if target < 0:
        return 0, 0
    work = (len(weights) + 1) * (target + 1)
    if work > max_iter:
        return -1, 0
    c = [1] * (target + 1)  # the free slack variable m: 1/(1-z)
    for w in weights:
        for e in range(w, target + 1):
            c[e] += c[e - w]
    return c[target], work
