"""Dense rational Gaussian elimination, the independent oracle for LinElim."""

from fractions import Fraction


def gauss_classify(rows, nvars):
    """rows: list of (coeff list, constant) meaning sum c_i x_i + const = 0.

    Returns ("unique", solution), ("under", None) or ("inconsistent", None).
    """
    aug = [[Fraction(c) for c in cs] + [Fraction(k)] for cs, k in rows]
    m = len(aug)
    pivots = []
    row = 0
    for col in range(nvars):
        pivot = None
        for r in range(row, m):
            if aug[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        aug[row], aug[pivot] = aug[pivot], aug[row]
        pv = aug[row][col]
        aug[row] = [x / pv for x in aug[row]]
        for r in range(m):
            if r != row and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    for r in range(row, m):
        if aug[r][nvars]:
            return "inconsistent", None
    if len(pivots) < nvars:
        return "under", None
    solution = [Fraction(0)] * nvars
    for r, col in enumerate(pivots):
        solution[col] = -aug[r][nvars]
    return "unique", solution
