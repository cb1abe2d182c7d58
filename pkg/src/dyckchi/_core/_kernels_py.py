"""Pure-Python word-enumeration kernel."""


def _next_permutation(w):
    i = len(w) - 2
    while i >= 0 and w[i] >= w[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(w) - 1
    while w[j] <= w[i]:
        j -= 1
    w[i], w[j] = w[j], w[i]
    w[i + 1 :] = reversed(w[i + 1 :])
    return True


def word_histogram(n, qpairs, tpairs, content):
    """Tabulate ``(#q-pairs with w[a] > w[b], #t-pairs with w[a] <= w[b])``.

    Runs over every word of length ``n`` in which letter ``k + 1`` occurs
    ``content[k]`` times.  Pairs are 0-based position pairs ``(a, b)``.
    Returns a dict mapping the exponent pair to the number of words.
    """
    if sum(content) != n:
        raise ValueError("content does not sum to the word length")
    qpairs = [tuple(p) for p in qpairs]
    tpairs = [tuple(p) for p in tpairs]
    w = [k + 1 for k, m in enumerate(content) for _ in range(m)]
    hist = {}
    while True:
        inv = 0
        for a, b in qpairs:
            if w[a] > w[b]:
                inv += 1
        tc = 0
        for a, b in tpairs:
            if w[a] <= w[b]:
                tc += 1
        key = (inv, tc)
        hist[key] = hist.get(key, 0) + 1
        if not _next_permutation(w):
            return hist
