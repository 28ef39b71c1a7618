from fractions import Fraction


def pairs_of(W, max_ldiff=None):
    """All pairs x < y of W as elements."""
    E = W.elements
    return [(E[i], E[j]) for i, j in W.comparable_pairs(max_ldiff)]


def names_A3(W):
    """Map the s, t, u words used for the A3 example to elements."""
    letters = {"s": "1", "t": "2", "u": "3"}
    return lambda word: W.parse_word(" ".join(letters[c] for c in word) if word != "e" else "e")


def fraction_rank(vectors):
    """Rank by plain Gaussian elimination over the rationals."""
    rows = [[Fraction(c) for c in v] for v in vectors]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col] / rows[r][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r
