"""Rightward reducing sequences (RRS).

An RRS for a word w is a factorisation w = mu w_1 ... w_m w_{m+1} gamma
together with critical words u_1 = w_1, u_i = (tail of tau(u_{i-1})) w_i,
whose left-to-right tau replacements leave a cancelling pair against
f(gamma), shortening the word by exactly 2.

This module provides the validity checker, application with trace events,
the optimality predicate, a brute-force enumerator (test oracle), and the
right-to-left search for the unique optimal RRS of w x with w in W.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .core import (
    GroupParams,
    ResourceLimitError,
    Word,
    commutes,
    format_word,
    free_reduce,
    inverse_letter,
    make_letter,
    power_word,
)
from .dihedral import tau_2gen
from .p2g import (
    P2GWitness,
    commuting_z,
    is_p2g_critical,
    shortest_p2g_critical_suffix,
    tau_p2g,
)
from .abc_critical import (
    AbcWitness,
    is_abc_critical,
    shortest_abc_critical_suffix,
    tau_abc,
)

# criticality types of the u_i
P2G_AB = "p2g-ab"
P2G_BC = "p2g-bc"
ABC = "abc"
CRITICAL_TYPES = (P2G_AB, P2G_BC, ABC)

Witness = Union[P2GWitness, AbcWitness]


class Meter:
    """Letters-visited counter for complexity reporting."""

    def __init__(self) -> None:
        self.letters = 0

    def add(self, k: int) -> None:
        self.letters += k


@dataclass(frozen=True)
class TraceEvent:
    step: int
    kind: str                      # tau_2gen | tau_p2g | tau_abc |
    span: tuple[int, int]          # commute-shift | free-cancel
    before: Word
    after: Word

    def to_json(self) -> dict:
        return {
            "step": self.step,
            "kind": self.kind,
            "span": [self.span[0], self.span[1]],
            "before": format_word(self.before),
            "after": format_word(self.after),
        }


@dataclass(frozen=True)
class Rrs:
    """A validated RRS: host = mu w_1 .. w_m w_{m+1} gamma.

    cuts has m+2 entries: cuts[0] is the start of w_1, cuts[i] the end of
    w_i, and host[cuts[-1]:] is gamma.  us holds (type, word, witness) for
    u_1..u_m plus (None, u_{m+1}, None).
    """
    host: Word
    cuts: tuple[int, ...]
    types: tuple[str, ...]
    us: tuple[tuple[Optional[str], Word, Optional[Witness]], ...]

    @property
    def m(self) -> int:
        return len(self.types)

    @property
    def gamma(self) -> Word:
        return self.host[self.cuts[-1]:]

    def w_part(self, i: int) -> Word:
        """w_i for 1 <= i <= m+1."""
        return self.host[self.cuts[i - 1]:self.cuts[i]]


def critical_witness(word: Word, ctype: str, params: GroupParams,
                     ) -> Optional[Witness]:
    if ctype == P2G_AB:
        return is_p2g_critical(word, "ab", params)
    if ctype == P2G_BC:
        return is_p2g_critical(word, "bc", params)
    if ctype == ABC:
        return is_abc_critical(word, params)
    raise ValueError(f"unknown criticality type {ctype!r}")


def tau_of(ctype: str, witness: Witness, params: GroupParams) -> Word:
    if ctype == ABC:
        return tau_abc(witness, params)
    return tau_p2g(witness, params)


def chain_head(ctype: str, witness: Witness, params: GroupParams) -> Word:
    """The prefix of u_{i+1} contributed by tau(u_i).

    P2G:  l(tau(hat(u_i))) beta_i   (a letter plus a z-power);
    ABC:  c^eps b^k beta_i          (beta_i a c-power).
    """
    if ctype == ABC:
        return (power_word(2, witness.epsilon)
                + power_word(1, witness.bab.k)
                + power_word(2, witness.beta))
    tau_hat = tau_2gen(witness.hat_witness, params)
    z = make_letter(commuting_z(witness.pair), 1)
    return (tau_hat[-1],) + power_word(z, witness.beta)


def alpha_of(ctype: str, witness: Witness) -> int:
    return witness.alpha


def check_rrs(host: Word, cuts: tuple[int, ...], types: tuple[str, ...],
              params: GroupParams) -> Optional[Rrs]:
    """Validate a declared factorisation + typing as an RRS (linear time)."""
    m = len(types)
    if len(cuts) != m + 2:
        return None
    if not all(0 <= cuts[i] <= len(host) for i in range(len(cuts))):
        return None
    if not all(cuts[i] <= cuts[i + 1] for i in range(len(cuts) - 1)):
        return None
    if cuts[-1] >= len(host):
        return None  # gamma must be nonempty
    gamma_first = host[cuts[-1]]
    # w_i nonempty for i <= m; w_{m+1} may be empty only when m > 0
    for i in range(1, m + 1):
        if cuts[i - 1] == cuts[i]:
            return None
    if m == 0 and cuts[0] == cuts[1]:
        return None

    us: list[tuple[Optional[str], Word, Optional[Witness]]] = []
    if m == 0:
        u = host[cuts[0]:cuts[1]]
    else:
        u = host[cuts[0]:cuts[1]]
        for i in range(m):
            wit = critical_witness(u, types[i], params)
            if wit is None:
                return None
            us.append((types[i], u, wit))
            w_next = host[cuts[i + 1]:cuts[i + 2]]
            u = chain_head(types[i], wit, params) + w_next
        # u is now u_{m+1}
    x = u[0]
    if x != inverse_letter(gamma_first):
        return None
    if any(not commutes(x, l) for l in u[1:]):
        return None
    us.append((None, u, None))
    return Rrs(host, tuple(cuts), tuple(types), tuple(us))


def apply_rrs(rrs: Rrs, params: GroupParams, want_trace: bool = False,
              ) -> tuple[Word, list[TraceEvent]]:
    """Left-to-right application: tau each u_i, shift u_{m+1}, cancel.

    Returns the freely reduced result (2 letters shorter on the reducer's
    inputs) and the trace events when requested.
    """
    letters = list(rrs.host)
    events: list[TraceEvent] = []
    m = rrs.m
    start, end = rrs.cuts[0], rrs.cuts[1]
    step = 0
    for i in range(m):
        ctype, u_word, wit = rrs.us[i]
        tau = tau_of(ctype, wit, params)
        if want_trace:
            if ctype == ABC:
                kind = "tau_abc"
            elif wit.word == wit.hat:
                kind = "tau_2gen"
            else:
                kind = "tau_p2g"
            events.append(TraceEvent(step, kind, (start, end),
                                     tuple(letters[start:end]), tau))
            step += 1
        letters[start:end] = tau
        if i + 1 < m + 1:
            if ctype == ABC:
                head_len = 1 + abs(wit.bab.k) + abs(wit.beta)
            else:
                head_len = 1 + abs(wit.beta)
            start = end - head_len
            end = rrs.cuts[i + 2]
    # u_{m+1} = x v  ->  v x
    u_last = letters[start:end]
    shifted = u_last[1:] + [u_last[0]]
    if want_trace and len(u_last) > 1:
        events.append(TraceEvent(step, "commute-shift", (start, end),
                                 tuple(u_last), tuple(shifted)))
        step += 1
    letters[start:end] = shifted
    gs = rrs.cuts[-1]
    if want_trace:
        events.append(TraceEvent(step, "free-cancel", (gs - 1, gs + 1),
                                 tuple(letters[gs - 1:gs + 1]), ()))
    del letters[gs - 1:gs + 1]
    return free_reduce(tuple(letters)), events


def is_optimal(rrs: Rrs, params: GroupParams, enumerate_limit: int = 16,
               ) -> bool:
    """Definition-level optimality.

    Condition (i) (no RRS starts further right) is decided by enumeration
    for hosts up to enumerate_limit letters, otherwise by re-running the
    optimal search (which requires p(host) in W).
    """
    host = rrs.host
    # (ii): f(gamma) must not occur in w_{m+1}
    gamma_first = host[rrs.cuts[-1]]
    if gamma_first in rrs.w_part(rrs.m + 1):
        return False
    # (iii): consecutive-type condition
    for i in range(1, rrs.m):
        prev_t, _, _ = rrs.us[i - 1]
        cur_t, _, cur_wit = rrs.us[i]
        if prev_t == ABC:
            continue
        if alpha_of(cur_t, cur_wit) != 0:
            continue
        if cur_t == ABC:
            ok = prev_t == P2G_AB   # |{x,y} n {b,c}| = 1
        else:
            ok = cur_t != prev_t    # distinct P2G pairs share exactly b
        if not ok:
            return False
    # (i): w_1 starts as far right as any RRS allows
    if len(host) <= enumerate_limit:
        rival = enumerate_all_rrs(host, params)
        best = max(r.cuts[0] for r in rival) if rival else -1
    else:
        found = find_optimal_rrs(host[:-1], host[-1], params)
        best = found.cuts[0] if found is not None else -1
    return rrs.cuts[0] == best


def enumerate_all_rrs(host: Word, params: GroupParams,
                      max_m: Optional[int] = None,
                      max_host_len: int = 16,
                      step_budget: int = 2_000_000) -> list[Rrs]:
    """Every valid RRS of host, by exhaustive search (test oracle).

    Guarded: hosts longer than max_host_len or searches exceeding the step
    budget raise ResourceLimitError.
    """
    L = len(host)
    if L > max_host_len:
        raise ResourceLimitError(
            f"enumerate_all_rrs limited to {max_host_len} letters, got {L}")
    if max_m is None:
        max_m = L
    steps = [0]
    results: list[Rrs] = []

    def spend() -> None:
        steps[0] += 1
        if steps[0] > step_budget:
            raise ResourceLimitError("enumerate_all_rrs budget exceeded")

    def close(cuts: list[int], types: list[str], u_prev) -> None:
        # choose w_{m+1} = host[pos:g], gamma = host[g:]
        pos = cuts[-1]
        ctype, wit = u_prev
        for g in range(pos, L):
            spend()
            u_last = chain_head(ctype, wit, params) + host[pos:g]
            if u_last[0] != inverse_letter(host[g]):
                continue
            if any(not commutes(u_last[0], l) for l in u_last[1:]):
                continue
            r = check_rrs(host, tuple(cuts + [g]), tuple(types), params)
            if r is not None:
                results.append(r)

    def extend(cuts: list[int], types: list[str], u_prev) -> None:
        close(cuts, types, u_prev)
        if len(types) >= max_m:
            return
        pos = cuts[-1]
        ctype, wit = u_prev
        head = chain_head(ctype, wit, params)
        for nxt in range(pos + 1, L):
            spend()
            u_next = head + host[pos:nxt]
            for t in CRITICAL_TYPES:
                w2 = critical_witness(u_next, t, params)
                if w2 is not None:
                    extend(cuts + [nxt], types + [t], (t, w2))

    for start in range(L):
        # m = 0: w_1 = x v with x = f(gamma)^-1
        for g in range(start + 1, L):
            spend()
            x = host[start]
            if x != inverse_letter(host[g]):
                continue
            if any(not commutes(x, l) for l in host[start + 1:g]):
                continue
            r = check_rrs(host, (start, g), (), params)
            if r is not None:
                results.append(r)
        # m >= 1
        for end1 in range(start + 1, L):
            spend()
            w1 = host[start:end1]
            for t in CRITICAL_TYPES:
                wit = critical_witness(w1, t, params)
                if wit is not None:
                    extend([start, end1], [t], (t, wit))
    return results


def _scan_distinguished(host: Word, from_idx: int, phases: tuple[int, ...],
                        meter: Optional[Meter]) -> Optional[int]:
    """Scan leftward from from_idx for the distinguished letter.

    phases lists the name indices to satisfy in scan order; the last entry
    is the distinguished name.  Returns its position, or None at the left
    end.  E.g. phases (1, 2) = "a name-b letter, then the first name-c".
    """
    i = from_idx
    seen = 0
    visited = 0
    while i >= 0:
        visited += 1
        if host[i] % 3 == phases[seen]:
            seen += 1
            if seen == len(phases):
                if meter:
                    meter.add(visited)
                return i
        i -= 1
    if meter:
        meter.add(visited)
    return None


def _left_neighbour(host: Word, pos: int, skip_name: int,
                    meter: Optional[Meter]) -> Optional[int]:
    i = pos - 1
    visited = 0
    while i >= 0 and host[i] % 3 == skip_name:
        i -= 1
        visited += 1
    if meter:
        meter.add(visited + 1)
    return i if i >= 0 else None


def find_optimal_rrs(w: Word, x: int, params: GroupParams,
                     meter: Optional[Meter] = None) -> Optional[Rrs]:
    """Search w x for its optimal RRS (w must be in W).

    Implements the right-to-left construction (step 1, the per-step case
    analysis on the criticality type, and the {a,b}-suffix probe deciding
    between types {a,b} and {a,b,c}) followed by the checking pass, which
    re-derives every u_i by the chain rule and re-verifies criticality.
    Returns None exactly when w x is in W.
    """
    L = len(w)
    host = w + (x,)
    inv_x = inverse_letter(x)

    # Step 1: longest suffix of w commuting with x and free of x^-1
    j = L
    while j > 0 and w[j - 1] != inv_x and commutes(w[j - 1], x):
        j -= 1
    if meter:
        meter.add(L - j + 1)
    if j == 0:
        return None
    if w[j - 1] == inv_x:
        # m = 0; keep w_{m+1} clear of f(gamma) by cutting at the first x
        e = j
        while e < L and w[e] != x:
            e += 1
        return check_rrs(host, (j - 1, e), (), params)
    s_name, t_name = x % 3, w[j - 1] % 3
    if s_name == t_name or s_name + t_name == 2:   # equal or {a,c}
        return None
    # the pair {s, t} always contains b here; it is {a,b} or {b,c}
    type_i = P2G_BC if 2 in (s_name, t_name) else P2G_AB

    bounds = [j, L]          # ends of w_m .. w_{m+1}
    types_rev = [type_i]
    e_i = j

    while True:
        # i = 1 test: shortest critical suffix of host[:e_i] of this type
        if type_i == P2G_AB:
            s0 = shortest_p2g_critical_suffix(host, "ab", params, end=e_i,
                                              meter=meter)
        elif type_i == P2G_BC:
            s0 = shortest_p2g_critical_suffix(host, "bc", params, end=e_i,
                                              meter=meter)
        else:
            s0 = shortest_abc_critical_suffix(host, params, end=e_i,
                                              meter=meter)
        if s0 is not None:
            cuts = tuple([s0] + bounds)
            return check_rrs(host, cuts, tuple(types_rev), params)

        if type_i == P2G_AB:
            pos = _scan_distinguished(host, e_i - 1, (1, 2), meter)
            if pos is None:
                return None
            lft = _left_neighbour(host, pos, 2, meter)
            if lft is None:
                return None
            r_name = host[pos + 1] % 3
            if host[lft] % 3 == 1 and r_name == 1:
                e_next, type_next = lft + 1, P2G_AB
            else:
                e_next, type_next = pos + 1, P2G_BC
        else:
            phases = (1, 0) if type_i == P2G_BC else (1, 2, 1, 0)
            pos = _scan_distinguished(host, e_i - 1, phases, meter)
            if pos is None:
                return None
            lft = _left_neighbour(host, pos, 0, meter)
            if lft is None:
                return None
            r_name = host[pos + 1] % 3
            if host[lft] % 3 == 1 and r_name == 1:
                e_next, type_next = lft + 1, P2G_BC
            else:
                e_next = pos + 1
                s1 = shortest_p2g_critical_suffix(host, "ab", params,
                                                  end=e_next, meter=meter)
                if s1 is None:
                    type_next = P2G_AB
                else:
                    wit1 = is_p2g_critical(host[s1:e_next], "ab", params)
                    if wit1 is None:
                        raise AssertionError(
                            "suffix scanner and direct checker disagree")
                    u2 = chain_head(P2G_AB, wit1, params) + host[e_next:e_i]
                    if is_p2g_critical(u2, "bc", params) is not None:
                        cuts = tuple([s1, e_next] + bounds)
                        return check_rrs(host, cuts,
                                         tuple([P2G_AB] + types_rev), params)
                    type_next = ABC
        bounds.insert(0, e_next)
        types_rev.insert(0, type_next)
        e_i = e_next
        type_i = type_next
