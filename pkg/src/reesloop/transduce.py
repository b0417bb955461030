"""Finite-state transducers with word-pair edge labels, and the explicit
transducer carrying the loop problem of a base semigroup onto the loop
problem of a Rees matrix semigroup over it."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .language import AlphabetMismatch, HatAlphabet, LanguageError, Nfa, parse_word
from .semigroup import GeneratorMap, ParseError, ReesStructure, SemigroupError


class HasZero(SemigroupError):
    pass


@dataclass(frozen=True)
class Transducer:
    """Edges carry a finite input word and a finite output word (either may
    be empty)."""

    in_alphabet: HatAlphabet
    out_alphabet: HatAlphabet
    n_states: int
    edges: frozenset[tuple[int, tuple[int, ...], tuple[int, ...], int]]
    initial: frozenset[int]
    final: frozenset[int]

    def __post_init__(self):
        for q in self.initial | self.final:
            if not (0 <= q < self.n_states):
                raise LanguageError(f"state {q} out of range")
        for p, u, v, q in self.edges:
            if not (0 <= p < self.n_states and 0 <= q < self.n_states):
                raise LanguageError("edge state out of range")
            for a in u:
                if not (0 <= a < self.in_alphabet.size):
                    raise LanguageError(f"input letter {a} out of range")
            for b in v:
                if not (0 <= b < self.out_alphabet.size):
                    raise LanguageError(f"output letter {b} out of range")

    def __repr__(self):
        return f"Transducer(states={self.n_states}, edges={len(self.edges)})"


def transducer(in_alphabet, out_alphabet, n_states, edges, initial, final) -> Transducer:
    return Transducer(in_alphabet, out_alphabet, n_states,
                      frozenset((p, tuple(u), tuple(v), q) for p, u, v, q in edges),
                      frozenset(initial), frozenset(final))


def normalize(t: Transducer) -> Transducer:
    """Split word labels so every edge reads at most one input letter and
    writes at most one output letter; the relation is unchanged."""
    edges = set()
    n = t.n_states
    for p, u, v, q in t.edges:
        steps = max(len(u), len(v), 1)
        if steps == 1:
            edges.add((p, u, v, q))
            continue
        prev = p
        for k in range(steps):
            nxt = q if k == steps - 1 else n
            if nxt == n:
                n += 1
            edges.add((prev,
                       u[k:k + 1],
                       v[k:k + 1],
                       nxt))
            prev = nxt
    return Transducer(t.in_alphabet, t.out_alphabet, n, frozenset(edges),
                      t.initial, t.final)


def accepts_pair(t: Transducer, u, v) -> bool:
    """True iff some initial-to-final path spells the pair (u, v); decided by
    search over (state, input position, output position) triples on the
    normalized form."""
    u, v = tuple(u), tuple(v)
    nt = normalize(t)
    by_state: dict[int, list] = {}
    for p, eu, ev, q in nt.edges:
        by_state.setdefault(p, []).append((eu, ev, q))
    start = {(p, 0, 0) for p in nt.initial}
    seen = set(start)
    queue = list(start)
    while queue:
        p, i, j = queue.pop()
        if i == len(u) and j == len(v) and p in nt.final:
            return True
        for eu, ev, q in by_state.get(p, ()):
            ni = i + len(eu)
            nj = j + len(ev)
            if ni > len(u) or nj > len(v):
                continue
            if u[i:ni] != eu or v[j:nj] != ev:
                continue
            state = (q, ni, nj)
            if state not in seen:
                seen.add(state)
                queue.append(state)
    return False


def apply(t: Transducer, l: Nfa) -> Nfa:
    """Image of a regular language under the transduction: the product of
    the language automaton with the normalized transducer, projected to the
    output tape."""
    if l.alphabet != t.in_alphabet:
        raise AlphabetMismatch("language is not over the transducer input alphabet")
    nt = normalize(t)
    l_eps: dict[int, set[int]] = {}
    l_step: dict[tuple[int, int], set[int]] = {}
    for p, x, q in l.transitions:
        if x is None:
            l_eps.setdefault(p, set()).add(q)
        else:
            l_step.setdefault((p, x), set()).add(q)
    ids: dict[tuple[int, int], int] = {}

    def sid(pair):
        if pair not in ids:
            ids[pair] = len(ids)
        return ids[pair]

    start = [(p, s) for p in l.initial for s in nt.initial]
    for pair in start:
        sid(pair)
    trans = set()
    queue = list(start)
    seen = set(start)

    def push(cur, lab, pair):
        trans.add((cur, lab, sid(pair)))
        if pair not in seen:
            seen.add(pair)
            queue.append(pair)

    t_by_state: dict[int, list] = {}
    for p, eu, ev, q in nt.edges:
        t_by_state.setdefault(p, []).append((eu, ev, q))
    while queue:
        lp, ts = queue.pop()
        cur = ids[(lp, ts)]
        for q in l_eps.get(lp, ()):
            push(cur, None, (q, ts))
        for eu, ev, tq in t_by_state.get(ts, ()):
            out = ev[0] if ev else None
            if not eu:
                push(cur, out, (lp, tq))
            else:
                for lq in l_step.get((lp, eu[0]), ()):
                    push(cur, out, (lq, tq))
    n = max(len(ids), 1)
    final = frozenset(ids[(p, s)] for (p, s) in ids
                      if p in l.final and s in nt.final)
    return Nfa(t.out_alphabet, n, frozenset(trans),
               frozenset(ids[pair] for pair in start), final)


def choose_words(gmap: GeneratorMap, rng: random.Random | None = None) -> dict[int, tuple[int, ...]]:
    """A shortest nonempty positive word for every element, by breadth-first
    search over the Cayley graph; ties broken by symbol order, or randomly
    when an rng is supplied."""
    target = gmap.target
    letters = list(range(len(gmap.alphabet)))
    words: dict[int, tuple[int, ...]] = {}
    order = letters if rng is None else rng.sample(letters, len(letters))
    queue: list[int] = []
    for x in order:
        e = gmap.image[x]
        if e not in words:
            words[e] = (x,)
            queue.append(e)
    while queue:
        nxt_queue: list[int] = []
        for e in queue:
            order = letters if rng is None else rng.sample(letters, len(letters))
            for x in order:
                p = target.mul(e, gmap.image[x])
                if p not in words:
                    words[p] = words[e] + (x,)
                    nxt_queue.append(p)
        queue = nxt_queue
    return words


def build_rees_transducer(s_gmap: GeneratorMap, rees: ReesStructure,
                          m_gmap: GeneratorMap,
                          words: dict[int, tuple[int, ...]] | None = None) -> Transducer:
    """The transducer from loops of the base semigroup to loops of the Rees
    matrix semigroup M(S; I, J; P).

    States are the pairs (i, j) plus a start state A and an end state Z.  For
    each generator y of M decoding to (i_y, g_y, j_y), with w_y a word for
    g_y and w_ji a word for P[j][i]:

      A -> (i_y, j_y)      reading (w_y, y)
      (i_y, j_y) -> Z      reading (w_y-bar, y-bar)
      (i, k) -> (i, j_y)   reading (w_{k i_y} w_y, y)       for all i, k
      (i, j_y) -> (i, j)   reading (w_y-bar w_{j i_y}-bar, y-bar)  for all i, j
    """
    if rees.with_zero:
        raise HasZero("the transducer construction needs a zero-free Rees product")
    if words is None:
        words = choose_words(s_gmap)
    in_alpha = HatAlphabet(tuple(s_gmap.alphabet))
    out_alpha = HatAlphabet(tuple(m_gmap.alphabet))
    icount, jcount = rees.i_count, rees.j_count

    def pair_state(i, j):
        return i * jcount + j

    state_a = icount * jcount
    state_z = state_a + 1
    edges = set()
    bar_in = in_alpha.bar_word
    for y, my in enumerate(m_gmap.image):
        iy, gy, jy = rees.decode(my)
        wy = words[gy]
        wy_bar = bar_in(wy)
        ybar = out_alpha.bar(y)
        edges.add((state_a, wy, (y,), pair_state(iy, jy)))
        edges.add((pair_state(iy, jy), wy_bar, (ybar,), state_z))
        for i in range(icount):
            for k in range(jcount):
                w_kiy = words[rees.sandwich.entry(k, iy)]
                edges.add((pair_state(i, k), w_kiy + wy, (y,), pair_state(i, jy)))
            for j in range(jcount):
                w_jiy = words[rees.sandwich.entry(j, iy)]
                edges.add((pair_state(i, jy), wy_bar + bar_in(w_jiy), (ybar,),
                           pair_state(i, j)))
    return Transducer(in_alpha, out_alpha, state_z + 1, frozenset(edges),
                      frozenset({state_a}), frozenset({state_z}))


# -- text format ---------------------------------------------------------------

def format_transducer(t: Transducer) -> str:
    lines = [f"states {t.n_states}",
             "in-alphabet " + " ".join(t.in_alphabet.base),
             "out-alphabet " + " ".join(t.out_alphabet.base),
             "initial " + " ".join(str(q) for q in sorted(t.initial)),
             "final " + " ".join(str(q) for q in sorted(t.final))]

    def word_text(alpha, w):
        return " ".join(alpha.name(x) for x in w) if w else "-"

    for p, u, v, q in sorted(t.edges):
        lines.append(f"{p} {word_text(t.in_alphabet, u)} / {word_text(t.out_alphabet, v)} {q}")
    return "\n".join(lines) + "\n"


def parse_transducer_text(text: str) -> Transducer:
    raw = text.splitlines()
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(raw) if ln.strip()]
    n_states = None
    in_base = out_base = None
    initial: list[int] = []
    final: list[int] = []
    edge_lines = []
    for no, ln in lines:
        toks = ln.split()
        if toks[0] == "states":
            n_states = int(toks[1])
        elif toks[0] == "in-alphabet":
            in_base = tuple(toks[1:])
        elif toks[0] == "out-alphabet":
            out_base = tuple(toks[1:])
        elif toks[0] == "initial":
            initial = [int(x) for x in toks[1:]]
        elif toks[0] == "final":
            final = [int(x) for x in toks[1:]]
        elif "/" in toks:
            edge_lines.append((no, toks))
        else:
            raise ParseError(f"unexpected line {ln!r}", no)
    if n_states is None or in_base is None or out_base is None:
        raise ParseError("missing states or alphabet lines", 1)
    in_alpha = HatAlphabet(in_base)
    out_alpha = HatAlphabet(out_base)
    edges = set()
    for no, toks in edge_lines:
        try:
            slash = toks.index("/")
            p = int(toks[0])
            q = int(toks[-1])
            u = parse_word(in_alpha, " ".join(toks[1:slash]))
            v = parse_word(out_alpha, " ".join(toks[slash + 1:-1]))
        except (ValueError, LanguageError) as e:
            raise ParseError(str(e), no) from None
        edges.add((p, u, v, q))
    try:
        return Transducer(in_alpha, out_alpha, n_states, frozenset(edges),
                          frozenset(initial), frozenset(final))
    except LanguageError as e:
        raise ParseError(str(e), 1) from None
