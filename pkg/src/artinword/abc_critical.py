"""Critical words of type {a,b,c} and their tau moves.

Such a word factors as u_p u_q u_r where u_p is a b-power or an
{a,c}-word starting with c, u_q is a {b,c}-word, and u_r is a P2G word of
type {a,b} whose ends have name a and whose hat rewrites to b^i a^j b^k.
Criticality additionally requires the companion word

    u_sharp = u_p u_q c^alpha(u_r) b^i

to be P2G-critical of type {b,c}.  The tau move rewrites the whole word as

    a^alpha(u_sharp)  p(tau(hat(u_sharp)))  a^j  c^eps  b^k  c^beta(u_r)

where eps is the sign of the final (name-c) letter of tau(hat(u_sharp)).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import GroupParams, Word, is_freely_reduced, power_word
from .dihedral import BabForm, tau_2gen, to_bab_form
from .p2g import P2GSuffixScanner, P2GWitness, decompose_p2g, is_p2g_critical

_A_LETTER = 0
_B_LETTER = 1
_C_LETTER = 2


@dataclass(frozen=True)
class AbcWitness:
    word: Word
    p_end: int            # u_p = word[:p_end]
    r_start: int          # u_r = word[r_start:], u_q in between
    ur_witness: P2GWitness
    bab: BabForm          # hat(u_r) -> b^i a^j b^k
    u_sharp: Word
    sharp_witness: P2GWitness
    epsilon: int          # sign of the trailing c-letter of tau(hat(u_sharp))
    alpha: int            # a-exponent alpha(u_sharp)
    beta: int             # c-exponent beta(u_r)

    @property
    def u_p(self) -> Word:
        return self.word[:self.p_end]

    @property
    def u_q(self) -> Word:
        return self.word[self.p_end:self.r_start]

    @property
    def u_r(self) -> Word:
        return self.word[self.r_start:]


def _ur_candidates(w: Word, end: int, params: GroupParams,
                   ) -> list[tuple[int, P2GWitness, BabForm]]:
    """Valid u_r suffixes of w[:end]: start positions with a name-a letter
    whose suffix is a P2G {a,b} word with name-a ends, uniform c-signs and
    a hat transformable to b^i a^j b^k.  Ordered shortest first.

    Stops extending once the hat profile rules every longer suffix out.
    """
    out: list[tuple[int, P2GWitness, BabForm]] = []
    if end == 0 or w[end - 1] % 3 != _A_LETTER:
        return out
    raw_p = raw_n = 0
    run_p = run_n = 0
    prev = -1
    for r0 in range(end - 1, -1, -1):
        l = w[r0]
        if l % 3 != _C_LETTER:     # hat letter; update profile going left
            if l < 3:
                ext = prev != -1 and prev < 3 and prev % 3 != l % 3
                run_p = run_p + 1 if ext else 1
                run_n = 0
                raw_p = max(raw_p, run_p)
            else:
                ext = prev != -1 and prev >= 3 and prev % 3 != l % 3
                run_n = run_n + 1 if ext else 1
                run_p = 0
                raw_n = max(raw_n, run_n)
            prev = l
            if min(3, raw_p) + min(3, raw_n) > 3:
                break
        if l % 3 != _A_LETTER:
            continue
        ur = w[r0:end]
        d = decompose_p2g(ur, "ab", params)
        if d is None:
            continue
        # uniform c-signs so that tau preserves length
        if abs(d.alpha) != sum(1 for t in d.u_p if t % 3 == _C_LETTER):
            continue
        if abs(d.beta) != sum(1 for t in d.u_s if t % 3 == _C_LETTER):
            continue
        bab = to_bab_form(d.hat, params)
        if bab is None:
            continue
        out.append((r0, d, bab))
    return out


def _sharp_tail(d: P2GWitness, bab: BabForm) -> Word:
    """c^alpha(u_r) b^i, the letters appended to u_p u_q to form u_sharp."""
    return power_word(_C_LETTER, d.alpha) + power_word(_B_LETTER, bab.i)


def _split_before(w: Word, s: int, r0: int) -> Optional[int]:
    """p_end for the u_p | u_q split of w[s:r0], or None if invalid.

    u_p is the maximal leading block: a b-power, or an {a,c}-word starting
    with c; every name-a letter left of r0 must land inside u_p.
    """
    if s >= r0:
        return None
    first = w[s] % 3
    if first == _A_LETTER:
        return None
    i = s
    if first == _B_LETTER:
        while i < r0 and w[i] % 3 == _B_LETTER:
            i += 1
    else:
        while i < r0 and w[i] % 3 != _B_LETTER:
            i += 1
    for j in range(i, r0):
        if w[j] % 3 == _A_LETTER:
            return None
    return i


def _witness_at(w: Word, s: int, end: int, r0: int, d: P2GWitness,
                bab: BabForm, params: GroupParams) -> Optional[AbcWitness]:
    p_end = _split_before(w, s, r0)
    if p_end is None:
        return None
    u_sharp = w[s:r0] + _sharp_tail(d, bab)
    sw = is_p2g_critical(u_sharp, "bc", params)
    if sw is None:
        return None
    th = tau_2gen(sw.hat_witness, params)
    last = th[-1]
    if last % 3 != _C_LETTER:
        raise AssertionError("tau(hat(u_sharp)) must end with a name-c letter")
    eps = 1 if last < 3 else -1
    if s == 0 and end == len(w):
        word = w
    else:
        word = w[s:end]
    return AbcWitness(
        word=word,
        p_end=p_end - s,
        r_start=r0 - s,
        ur_witness=d,
        bab=bab,
        u_sharp=u_sharp,
        sharp_witness=sw,
        epsilon=eps,
        alpha=sw.alpha,
        beta=d.beta,
    )


def is_abc_critical(w: Word, params: GroupParams) -> Optional[AbcWitness]:
    """Witness iff w is critical of type {a,b,c}.

    Candidate u_r suffixes are tried shortest first, which maximizes u_q
    and gives condition (iv) the most room; the first full witness wins.
    """
    if not w or not is_freely_reduced(w):
        return None
    if w[-1] % 3 != _A_LETTER or w[0] % 3 == _A_LETTER:
        return None
    for r0, d, bab in _ur_candidates(w, len(w), params):
        if r0 == 0:
            continue
        witness = _witness_at(w, 0, len(w), r0, d, bab, params)
        if witness is not None:
            return witness
    return None


def tau_abc(witness: AbcWitness, params: GroupParams) -> Word:
    """The type-(a,b,c) tau move; same length, same group element."""
    th = tau_2gen(witness.sharp_witness.hat_witness, params)
    return (power_word(_A_LETTER, witness.alpha)
            + th[:-1]
            + power_word(_A_LETTER, witness.bab.j)
            + power_word(_C_LETTER, witness.epsilon)
            + power_word(_B_LETTER, witness.bab.k)
            + power_word(_C_LETTER, witness.beta))


def shortest_abc_critical_suffix(w: Word, params: GroupParams,
                                 end: Optional[int] = None,
                                 meter=None) -> Optional[int]:
    """Start index of the shortest {a,b,c}-critical suffix of w[:end]."""
    if end is None:
        end = len(w)
    if end == 0 or w[end - 1] % 3 != _A_LETTER:
        return None
    candidates = _ur_candidates(w, end, params)
    if not candidates:
        return None
    # one incremental {b,c}-criticality scanner per candidate u_r, over the
    # virtual word  w[:r0] + c^alpha b^i ; entries are [r0, scanner, cursor]
    cursors = []
    for r0, d, bab in candidates:
        scan = P2GSuffixScanner("bc", params)
        for l in reversed(_sharp_tail(d, bab)):
            scan.feed(l)
        cursors.append([r0, scan, r0])
    a_below = {entry[0]: -1 for entry in cursors}  # largest a-name pos < r0
    run_nonb = 0
    for s in range(end - 1, -1, -1):
        name = w[s] % 3
        run_nonb = run_nonb + 1 if name != _B_LETTER else 0
        if name == _A_LETTER:
            for r0 in a_below:
                if s < r0 and a_below[r0] == -1:
                    a_below[r0] = s
            continue
        alive = False
        for entry in cursors:
            r0, scan, cur = entry
            if scan.dead:
                continue
            if r0 <= s:
                alive = True
                continue
            while cur > s:
                cur -= 1
                scan.feed(w[cur])
                if meter:
                    meter.add(1)
            entry[2] = cur
            if scan.dead:
                continue
            alive = True
            ab = a_below[r0]
            if name == _B_LETTER:
                if ab >= s:
                    continue
            else:
                if ab >= min(s + run_nonb, r0):
                    continue
            if scan.critical_now():
                return s
        if not alive:
            return None
    return None


def abc_witness_for_suffix(w: Word, s: int, params: GroupParams,
                           end: Optional[int] = None) -> Optional[AbcWitness]:
    """Full witness for the suffix w[s:end] (used after a scanner hit)."""
    if end is None:
        end = len(w)
    for r0, d, bab in _ur_candidates(w, end, params):
        if r0 <= s:
            continue
        witness = _witness_at(w, s, end, r0, d, bab, params)
        if witness is not None:
            return witness
    return None
