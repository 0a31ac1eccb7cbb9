"""Integer row engine for exact linear algebra over the Gaussian rationals.

A row encodes a vector in F^width (F = Q(i)) as ``(den, re, im)`` where
``den`` is a positive integer, ``re``/``im`` are integer sequences of length
``width`` and entry k equals ``(re[k] + i*im[k]) / den``.  ``im is None``
means the imaginary part is identically zero; keeping that case on a separate
code path roughly halves the cost for real data.

All mutation is local to this module; callers receive rows with tuple
components, safe to share.
"""

from __future__ import annotations

from math import gcd

# (den, re, im-or-None); components are tuples in canonical rows.
Row = tuple

# Denominator size at which lazy content reduction kicks in.
_REDUCE_BOUND = 1 << 48


def make_row(re, im=None):
    """Integer row with denominator 1. Collapses an all-zero ``im`` to None."""
    if im is not None and not any(im):
        im = None
    return (1, tuple(re), None if im is None else tuple(im))


def row_is_zero(row) -> bool:
    _, re, im = row
    return not any(re) and (im is None or not any(im))


def _reduce_content(den, re, im):
    """Divide out gcd(den, entries) and drop an all-zero imaginary part."""
    if im is not None and not any(im):
        im = None
    g = gcd(den, *re) if im is None else gcd(den, *re, *im)
    if g > 1:
        den //= g
        re = [x // g for x in re]
        if im is not None:
            im = [x // g for x in im]
    return den, re, im


def _eliminate(den, pre, pim, dr, vre, vim, col):
    """Return target row minus (its col entry) times the unit-pivot row.

    Pivot row is ``(pre + i*pim)/den`` with entry 1 at ``col``; target is
    ``(vre + i*vim)/dr``.  Result denominator is ``dr*den`` before reduction.
    """
    c = vre[col]
    d = vim[col] if vim is not None else 0
    if d == 0:
        if den == 1:
            nre = [x - c * u for x, u in zip(vre, pre)]
        else:
            nre = [den * x - c * u for x, u in zip(vre, pre)]
        if pim is None:
            if vim is None:
                nim = None
            elif den == 1:
                nim = list(vim)
            else:
                nim = [den * y for y in vim]
        else:
            base = vim if vim is not None else (0,) * len(vre)
            nim = [den * y - c * w for y, w in zip(base, pim)]
    else:
        if pim is None:
            nre = [den * x - c * u for x, u in zip(vre, pre)]
            nim = [den * y - d * u for y, u in zip(vim, pre)]
        else:
            nre = [den * x - c * u + d * w for x, u, w in zip(vre, pre, pim)]
            nim = [den * y - c * w - d * u for y, w, u in zip(vim, pim, pre)]
    nd = dr * den
    # Content reduction is lazy: correctness never needs it mid-elimination,
    # so pay for the gcd only once the denominator has actually grown.
    if nd < _REDUCE_BOUND:
        if nim is not None and not any(nim):
            nim = None
        return nd, nre, nim
    return _reduce_content(nd, nre, nim)


def _normalize_pivot(dp, re, im, col):
    """Divide a row by its leading entry at ``col``; the old denominator
    cancels, leaving entry 1 represented as den == re[col]."""
    a = re[col]
    b = im[col] if im is not None else 0
    if b == 0:
        if a == dp:
            # Leading entry already exactly 1; content reduction can wait
            # for the final output pass.
            return dp, re, im
        if a < 0:
            re = [-x for x in re]
            if im is not None:
                im = [-x for x in im]
            a = -a
        den = a
    else:
        nre = [a * x + b * y for x, y in zip(re, im)]
        nim = [a * y - b * x for x, y in zip(re, im)]
        re, im = nre, nim
        den = a * a + b * b
    return _reduce_content(den, re, im)


def rref(rows, width):
    """Unique reduced row echelon form over Q(i).

    ``rows`` is an iterable of ``(den, re, im)`` rows; returns
    ``(pivots, out)`` where ``out`` holds canonical rows (tuple components,
    leading entry exactly 1, content-reduced) and ``pivots`` the pivot
    column indices in increasing order.

    The elimination loop is deliberately inlined: this is the single hot
    path of the whole package.
    """
    work = []
    for den, re, im in rows:
        if im is not None and not any(im):
            im = None
        if any(re) or im is not None:
            work.append((den, list(re), list(im) if im is not None else None))
    m = len(work)
    pivots = []
    prow = 0
    bound = _REDUCE_BOUND
    for col in range(width):
        pr = -1
        for r in range(prow, m):
            _, re, im = work[r]
            if re[col] or (im is not None and im[col]):
                pr = r
                break
        if pr < 0:
            continue
        work[prow], work[pr] = work[pr], work[prow]
        dp, pre, pim = work[prow]
        den, pre, pim = _normalize_pivot(dp, pre, pim, col)
        work[prow] = (den, pre, pim)
        den_is_one = den == 1
        for r in range(m):
            if r == prow:
                continue
            dr, vre, vim = work[r]
            c = vre[col]
            d = vim[col] if vim is not None else 0
            if not c and not d:
                continue
            if d == 0:
                if den_is_one:
                    nre = [x - c * u for x, u in zip(vre, pre)]
                else:
                    nre = [den * x - c * u for x, u in zip(vre, pre)]
                if pim is None:
                    if vim is None:
                        nim = None
                    elif den_is_one:
                        nim = vim
                    else:
                        nim = [den * y for y in vim]
                elif vim is None:
                    nim = [-c * w for w in pim]
                else:
                    nim = [den * y - c * w for y, w in zip(vim, pim)]
            else:
                # d != 0 forces vim to be present.
                if pim is None:
                    nre = [den * x - c * u for x, u in zip(vre, pre)]
                    nim = [den * y - d * u for y, u in zip(vim, pre)]
                else:
                    nre = [
                        den * x - c * u + d * w
                        for x, u, w in zip(vre, pre, pim)
                    ]
                    nim = [
                        den * y - c * w - d * u
                        for y, w, u in zip(vim, pim, pre)
                    ]
            nd = dr * den
            if nd < bound:
                if nim is not None and not any(nim):
                    nim = None
                work[r] = (nd, nre, nim)
            else:
                work[r] = _reduce_content(nd, nre, nim)
        pivots.append(col)
        prow += 1
        if prow == m:
            break
    # Lazy elimination can leave shared content behind; canonical uniqueness
    # requires one full reduction per surviving row.  A pivot row with den 1
    # has leading entry exactly 1, hence content 1 already.
    out = []
    for den, re, im in work[:prow]:
        if den != 1:
            den, re, im = _reduce_content(den, re, im)
        elif im is not None and not any(im):
            im = None
        out.append((den, tuple(re), None if im is None else tuple(im)))
    return pivots, out


def nullspace(pivots, rows, width):
    """Canonical basis of the right null space of a matrix in RREF.

    ``rows`` must be canonical output of :func:`rref`.  The null space is
    {x : sum_k M[r][k] * x[k] = 0 for all r}; the returned rows are again in
    canonical RREF form.
    """
    pivot_set = set(pivots)
    free = [c for c in range(width) if c not in pivot_set]
    basis = []
    for f in free:
        den_lcm = 1
        for (den, re, im), p in zip(rows, pivots):
            if re[f] or (im is not None and im[f]):
                den_lcm = den_lcm * den // gcd(den_lcm, den)
        vre = [0] * width
        vim = [0] * width
        vre[f] = den_lcm
        has_im = False
        for (den, re, im), p in zip(rows, pivots):
            s = den_lcm // den
            vre[p] = -re[f] * s
            if im is not None and im[f]:
                vim[p] = -im[f] * s
                has_im = True
        basis.append(_reduce_content(1, vre, vim if has_im else None))
    _, out = rref(basis, width)
    return out


def reduce_against(pivots, rows, vec):
    """Residual of ``vec`` after eliminating its pivot-column entries with
    the canonical ``rows``.  Zero residual means membership in the row space.
    """
    dv, vre, vim = vec
    vre = list(vre)
    vim = list(vim) if vim is not None else None
    for (den, re, im), col in zip(rows, pivots):
        if vre[col] or (vim is not None and vim[col]):
            dv, vre, vim = _eliminate(den, re, im, dv, vre, vim, col)
    return dv, vre, vim


def member(pivots, rows, vec) -> bool:
    """True if ``vec`` lies in the row space of canonical ``rows``."""
    _, re, im = reduce_against(pivots, rows, vec)
    return not any(re) and (im is None or not any(im))


def conjugate_row(row):
    den, re, im = row
    if im is None:
        return row
    return (den, re, tuple(-x for x in im))


def scale_int_row(row, k: int):
    """Multiply a row by the integer k (k may be negative, not zero)."""
    den, re, im = row
    nre = [k * x for x in re]
    nim = None if im is None else [k * x for x in im]
    return _reduce_content(den, nre, nim)
