"""Regular languages over involutive doubled alphabets.

Automata are partial (no explicit dead state); epsilon transitions are
permitted in an Nfa and eliminated during determinization.  State sets are
handled as integer bitmasks internally.
"""

from __future__ import annotations

from dataclasses import dataclass

from .semigroup import ParseError


class LanguageError(ValueError):
    pass


class AlphabetMismatch(LanguageError):
    pass


class NotInvolutive(LanguageError):
    pass


@dataclass(frozen=True)
class PlainAlphabet:
    """Symbols without a bar involution (transducer tapes, ad hoc tests)."""

    symbols: tuple[str, ...]

    def __post_init__(self):
        _check_symbols(self.symbols)

    @property
    def size(self) -> int:
        return len(self.symbols)

    def name(self, letter: int) -> str:
        return self.symbols[letter]

    def letter(self, name: str) -> int:
        try:
            return self.symbols.index(name)
        except ValueError:
            raise LanguageError(f"unknown symbol {name!r}") from None


@dataclass(frozen=True)
class HatAlphabet:
    """X^ = X union X-bar; letter k+i is the bar partner of letter i."""

    base: tuple[str, ...]

    def __post_init__(self):
        _check_symbols(self.base)

    @property
    def size(self) -> int:
        return 2 * len(self.base)

    @property
    def symbols(self) -> tuple[str, ...]:
        return self.base + tuple("~" + b for b in self.base)

    def bar(self, letter: int) -> int:
        k = len(self.base)
        return letter - k if letter >= k else letter + k

    def is_positive(self, letter: int) -> bool:
        return letter < len(self.base)

    def bar_word(self, word) -> tuple[int, ...]:
        """Reverse the word and bar each letter."""
        return tuple(self.bar(a) for a in reversed(word))

    def name(self, letter: int) -> str:
        k = len(self.base)
        return self.base[letter] if letter < k else "~" + self.base[letter - k]

    def letter(self, name: str) -> int:
        if name.startswith("~"):
            return len(self.base) + self._base_index(name[1:])
        return self._base_index(name)

    def _base_index(self, name: str) -> int:
        try:
            return self.base.index(name)
        except ValueError:
            raise LanguageError(f"unknown symbol {name!r}") from None

    def positive_letter(self, symbol: str) -> int:
        return self._base_index(symbol)


Alphabet = PlainAlphabet | HatAlphabet


def _check_symbols(symbols):
    if len(set(symbols)) != len(symbols):
        raise LanguageError("alphabet symbols must be distinct")
    for s in symbols:
        if not s or s == "-" or s.startswith("~") or any(c.isspace() for c in s):
            raise LanguageError(f"bad symbol {s!r}")


@dataclass(frozen=True)
class Nfa:
    alphabet: Alphabet
    n_states: int
    transitions: frozenset[tuple[int, int | None, int]]
    initial: frozenset[int]
    final: frozenset[int]

    def __post_init__(self):
        for q in self.initial | self.final:
            if not (0 <= q < self.n_states):
                raise LanguageError(f"state {q} out of range")
        for p, a, q in self.transitions:
            if not (0 <= p < self.n_states and 0 <= q < self.n_states):
                raise LanguageError(f"transition state out of range: {(p, a, q)}")
            if a is not None and not (0 <= a < self.alphabet.size):
                raise LanguageError(f"letter {a} out of range")

    def __repr__(self):
        return f"Nfa(states={self.n_states}, transitions={len(self.transitions)})"


@dataclass(frozen=True)
class Dfa:
    """Partial DFA; transitions[p][a] is the successor or None."""

    alphabet: Alphabet
    n_states: int
    transitions: tuple[tuple[int | None, ...], ...]
    initial: int
    final: frozenset[int]
    minimal: bool = False

    def __post_init__(self):
        if not (0 <= self.initial < self.n_states):
            raise LanguageError("initial state out of range")
        if len(self.transitions) != self.n_states:
            raise LanguageError("transition table size mismatch")
        for row in self.transitions:
            if len(row) != self.alphabet.size:
                raise LanguageError("transition row size mismatch")
            for q in row:
                if q is not None and not (0 <= q < self.n_states):
                    raise LanguageError("transition target out of range")
        for q in self.final:
            if not (0 <= q < self.n_states):
                raise LanguageError("final state out of range")

    def __repr__(self):
        return f"Dfa(states={self.n_states}, minimal={self.minimal})"


def nfa(alphabet, n_states, transitions, initial, final) -> Nfa:
    return Nfa(alphabet, n_states, frozenset(tuple(t) for t in transitions),
               frozenset(initial), frozenset(final))


def as_nfa(a: Nfa | Dfa) -> Nfa:
    if isinstance(a, Nfa):
        return a
    trans = {(p, x, q) for p, row in enumerate(a.transitions)
             for x, q in enumerate(row) if q is not None}
    return Nfa(a.alphabet, a.n_states, frozenset(trans),
               frozenset({a.initial}), a.final)


def empty_nfa(alphabet) -> Nfa:
    return Nfa(alphabet, 1, frozenset(), frozenset({0}), frozenset())


def epsilon_nfa(alphabet) -> Nfa:
    return Nfa(alphabet, 1, frozenset(), frozenset({0}), frozenset({0}))


def word_nfa(alphabet, word) -> Nfa:
    word = tuple(word)
    trans = {(i, a, i + 1) for i, a in enumerate(word)}
    return Nfa(alphabet, len(word) + 1, frozenset(trans),
               frozenset({0}), frozenset({len(word)}))


def word_set_nfa(alphabet, words) -> Nfa:
    """Union of finite words as one automaton (a simple chain per word)."""
    trans = set()
    final = set()
    n = 1
    for w in words:
        w = tuple(w)
        if not w:
            final.add(0)
            continue
        prev = 0
        for i, a in enumerate(w):
            nxt = n
            n += 1
            trans.add((prev, a, nxt))
            prev = nxt
        final.add(prev)
    return Nfa(alphabet, n, frozenset(trans), frozenset({0}), frozenset(final))


def universe_nfa(alphabet, letters=None) -> Nfa:
    """All words over the given letters (default: the whole alphabet)."""
    if letters is None:
        letters = range(alphabet.size)
    trans = {(0, a, 0) for a in letters}
    return Nfa(alphabet, 1, frozenset(trans), frozenset({0}), frozenset({0}))


# -- bitmask engine -----------------------------------------------------------

def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _adjacency(a: Nfa):
    eps = [0] * a.n_states
    step = [[0] * a.n_states for _ in range(a.alphabet.size)]
    for p, x, q in a.transitions:
        if x is None:
            eps[p] |= 1 << q
        else:
            step[x][p] |= 1 << q
    return eps, step


def _closure(eps, mask: int) -> int:
    todo = mask
    while todo:
        low = todo & -todo
        todo ^= low
        add = eps[low.bit_length() - 1] & ~mask
        mask |= add
        todo |= add
    return mask


def _mask(states) -> int:
    m = 0
    for q in states:
        m |= 1 << q
    return m


def _move(step, eps, mask: int, letter: int) -> int:
    out = 0
    row = step[letter]
    for p in _bits(mask):
        out |= row[p]
    return _closure(eps, out) if out else 0


def determinize(a: Nfa) -> Dfa:
    """Subset construction with epsilon elimination; no dead state is kept."""
    eps, step = _adjacency(a)
    start = _closure(eps, _mask(a.initial))
    fmask = _mask(a.final)
    nletters = a.alphabet.size
    ids = {start: 0}
    rows = [[None] * nletters]
    final = set()
    queue = [start]
    while queue:
        mask = queue.pop()
        sid = ids[mask]
        if mask & fmask:
            final.add(sid)
        for x in range(nletters):
            nxt = _move(step, eps, mask, x)
            if not nxt:
                continue
            tid = ids.get(nxt)
            if tid is None:
                tid = len(ids)
                ids[nxt] = tid
                rows.append([None] * nletters)
                queue.append(nxt)
            rows[sid][x] = tid
    return Dfa(a.alphabet, len(rows), tuple(tuple(r) for r in rows),
               0, frozenset(final))


def _trim_dfa(d: Dfa):
    """States reachable from the initial state and co-accessible to a final."""
    nletters = d.alphabet.size
    reach = {d.initial}
    queue = [d.initial]
    while queue:
        p = queue.pop()
        for x in range(nletters):
            q = d.transitions[p][x]
            if q is not None and q not in reach:
                reach.add(q)
                queue.append(q)
    rev: dict[int, set[int]] = {q: set() for q in range(d.n_states)}
    for p in range(d.n_states):
        for x in range(nletters):
            q = d.transitions[p][x]
            if q is not None:
                rev[q].add(p)
    co = set(d.final)
    queue = list(co)
    while queue:
        q = queue.pop()
        for p in rev[q]:
            if p not in co:
                co.add(p)
                queue.append(p)
    return reach & co


def minimize(d: Dfa) -> Dfa:
    """Moore partition refinement on the trimmed partial DFA, renumbered
    canonically by breadth-first order; equivalent inputs yield identical
    outputs."""
    keep = sorted(_trim_dfa(d))
    nletters = d.alphabet.size
    if d.initial not in keep:
        return Dfa(d.alphabet, 1, ((None,) * nletters,), 0, frozenset(),
                   minimal=True)
    idx = {p: i for i, p in enumerate(keep)}
    n = len(keep)
    trans = [[idx.get(d.transitions[p][x]) if d.transitions[p][x] in idx else None
              for x in range(nletters)] for p in keep]
    final = {idx[p] for p in d.final if p in idx}
    cls = [1 if p in final else 0 for p in range(n)]
    while True:
        sigs = {}
        new = [0] * n
        for p in range(n):
            sig = (cls[p], tuple(-1 if q is None else cls[q] for q in trans[p]))
            if sig not in sigs:
                sigs[sig] = len(sigs)
            new[p] = sigs[sig]
        if new == cls:
            break
        cls = new
    start_cls = cls[idx[d.initial]]
    rep = {}
    for p in range(n):
        rep.setdefault(cls[p], p)
    order = {start_cls: 0}
    queue = [start_cls]
    while queue:
        c = queue.pop(0)
        p = rep[c]
        for x in range(nletters):
            q = trans[p][x]
            if q is not None and cls[q] not in order:
                order[cls[q]] = len(order)
                queue.append(cls[q])
    m = len(order)
    rows = [[None] * nletters for _ in range(m)]
    fin = set()
    for c, i in order.items():
        p = rep[c]
        for x in range(nletters):
            q = trans[p][x]
            if q is not None:
                rows[i][x] = order[cls[q]]
        if p in final:
            fin.add(i)
    return Dfa(d.alphabet, m, tuple(tuple(r) for r in rows), 0,
               frozenset(fin), minimal=True)


def minimal_dfa(a: Nfa | Dfa) -> Dfa:
    return minimize(a if isinstance(a, Dfa) else determinize(a))


def member(a: Nfa | Dfa, word) -> bool:
    """State-set simulation."""
    a = as_nfa(a)
    eps, step = _adjacency(a)
    mask = _closure(eps, _mask(a.initial))
    for x in word:
        mask = _move(step, eps, mask, x)
        if not mask:
            return False
    return bool(mask & _mask(a.final))


def shortest_separator(a: Nfa | Dfa, b: Nfa | Dfa):
    """Shortest word in the symmetric difference (BFS on the synchronized
    product with implicit dead states), or None when equivalent."""
    da = a if isinstance(a, Dfa) else determinize(a)
    db = b if isinstance(b, Dfa) else determinize(b)
    if da.alphabet != db.alphabet:
        raise AlphabetMismatch("cannot compare over different alphabets")
    nletters = da.alphabet.size
    start = (da.initial, db.initial)
    seen = {start: None}
    queue = [start]
    while queue:
        pair = queue.pop(0)
        p, q = pair
        ina = p is not None and p in da.final
        inb = q is not None and q in db.final
        if ina != inb:
            word = []
            cur = pair
            while seen[cur] is not None:
                cur, x = seen[cur]
                word.append(x)
            return tuple(reversed(word))
        for x in range(nletters):
            np = da.transitions[p][x] if p is not None else None
            nq = db.transitions[q][x] if q is not None else None
            if np is None and nq is None:
                continue
            nxt = (np, nq)
            if nxt not in seen:
                seen[nxt] = (pair, x)
                queue.append(nxt)
    return None


def equivalent(a: Nfa | Dfa, b: Nfa | Dfa) -> bool:
    return shortest_separator(a, b) is None


def _offset(trans, by: int):
    return {(p + by, a, q + by) for p, a, q in trans}


def _require_same(a: Nfa, b: Nfa):
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch("operands over different alphabets")


def union(a: Nfa, b: Nfa) -> Nfa:
    _require_same(a, b)
    return Nfa(a.alphabet, a.n_states + b.n_states,
               frozenset(a.transitions) | frozenset(_offset(b.transitions, a.n_states)),
               a.initial | frozenset(q + a.n_states for q in b.initial),
               a.final | frozenset(q + a.n_states for q in b.final))


def concat(a: Nfa, b: Nfa) -> Nfa:
    _require_same(a, b)
    bridge = {(f, None, i + a.n_states) for f in a.final for i in b.initial}
    return Nfa(a.alphabet, a.n_states + b.n_states,
               frozenset(a.transitions) | frozenset(_offset(b.transitions, a.n_states)) | frozenset(bridge),
               a.initial,
               frozenset(q + a.n_states for q in b.final))


def star(a: Nfa) -> Nfa:
    """Kleene closure; always accepts the empty word."""
    hub = a.n_states
    trans = set(a.transitions)
    trans.update((hub, None, i) for i in a.initial)
    trans.update((f, None, hub) for f in a.final)
    return Nfa(a.alphabet, a.n_states + 1, frozenset(trans),
               frozenset({hub}), frozenset({hub}))


def plus(a: Nfa) -> Nfa:
    trans = set(a.transitions)
    trans.update((f, None, i) for f in a.final for i in a.initial)
    return Nfa(a.alphabet, a.n_states, frozenset(trans), a.initial, a.final)


def intersect(a: Nfa, b: Nfa) -> Nfa:
    """Product construction; epsilon moves advance one side at a time."""
    _require_same(a, b)
    ids: dict[tuple[int, int], int] = {}

    def sid(p, q):
        if (p, q) not in ids:
            ids[(p, q)] = len(ids)
        return ids[(p, q)]

    a_by_state: dict[int, list] = {}
    for p, x, q in a.transitions:
        a_by_state.setdefault(p, []).append((x, q))
    b_by_state: dict[int, list] = {}
    for p, x, q in b.transitions:
        b_by_state.setdefault(p, []).append((x, q))
    init = [(p, q) for p in a.initial for q in b.initial]
    for pair in init:
        sid(*pair)
    trans = set()
    queue = list(init)
    seen = set(init)
    while queue:
        p, q = queue.pop()
        cur = sid(p, q)
        for x, p2 in a_by_state.get(p, ()):
            if x is None:
                targets = [((p2, q), None)]
            else:
                targets = [((p2, q2), x) for (y, q2) in b_by_state.get(q, ()) if y == x]
            for pair, lab in targets:
                trans.add((cur, lab, sid(*pair)))
                if pair not in seen:
                    seen.add(pair)
                    queue.append(pair)
        for y, q2 in b_by_state.get(q, ()):
            if y is None:
                pair = (p, q2)
                trans.add((cur, None, sid(*pair)))
                if pair not in seen:
                    seen.add(pair)
                    queue.append(pair)
    n = max(len(ids), 1)
    final = frozenset(ids[(p, q)] for (p, q) in ids
                      if p in a.final and q in b.final)
    return Nfa(a.alphabet, n, frozenset(trans),
               frozenset(ids[pair] for pair in init), final)


def _sync_product_pairs(l: Nfa, r: Nfa):
    """Transitions of the synchronized product of l and r as a pair graph."""
    edges: dict[tuple[int, int], set[tuple[int, int]]] = {}
    l_by_state: dict[int, list] = {}
    for p, x, q in l.transitions:
        l_by_state.setdefault(p, []).append((x, q))
    r_by_state: dict[int, list] = {}
    for p, x, q in r.transitions:
        r_by_state.setdefault(p, []).append((x, q))
    for p in range(l.n_states):
        for q in range(r.n_states):
            outs = edges.setdefault((p, q), set())
            for x, p2 in l_by_state.get(p, ()):
                if x is None:
                    outs.add((p2, q))
                else:
                    for y, q2 in r_by_state.get(q, ()):
                        if y == x:
                            outs.add((p2, q2))
            for y, q2 in r_by_state.get(q, ()):
                if y is None:
                    outs.add((p, q2))
    return edges


def right_quotient(l: Nfa, r: Nfa) -> Nfa:
    """L R^-1 = {w : wr in L for some r in R}.  Final states of L become
    those from which some word of R completes to acceptance."""
    _require_same(l, r)
    edges = _sync_product_pairs(l, r)
    good = {(p, q) for p in l.final for q in r.final}
    changed = True
    while changed:
        changed = False
        for pair, outs in edges.items():
            if pair not in good and outs & good:
                good.add(pair)
                changed = True
    eps_r, _ = _adjacency(r)
    r_start = _closure(eps_r, _mask(r.initial))
    new_final = {p for p in range(l.n_states)
                 if any((p, q) in good for q in _bits(r_start))}
    return Nfa(l.alphabet, l.n_states, l.transitions, l.initial,
               frozenset(new_final))


def left_quotient(r: Nfa, l: Nfa) -> Nfa:
    """R^-1 L = {w : rw in L for some r in R}.  Initial states of L become
    those reachable from an initial state along some word of R."""
    _require_same(l, r)
    edges = _sync_product_pairs(l, r)
    start = {(p, q) for p in l.initial for q in r.initial}
    seen = set(start)
    queue = list(start)
    while queue:
        pair = queue.pop()
        for nxt in edges[pair]:
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    new_initial = {p for (p, q) in seen if q in r.final}
    return Nfa(l.alphabet, l.n_states, l.transitions,
               frozenset(new_initial), l.final)


def involution_image(a: Nfa) -> Nfa:
    """w -> w-bar: reverse the automaton and bar each letter."""
    if not isinstance(a.alphabet, HatAlphabet):
        raise NotInvolutive("alphabet carries no bar involution")
    bar = a.alphabet.bar
    trans = {(q, None if x is None else bar(x), p) for p, x, q in a.transitions}
    return Nfa(a.alphabet, a.n_states, frozenset(trans), a.final, a.initial)


def trim(a: Nfa) -> Nfa:
    """Keep only states both reachable and co-accessible."""
    fwd: dict[int, set[int]] = {p: set() for p in range(a.n_states)}
    rev: dict[int, set[int]] = {p: set() for p in range(a.n_states)}
    for p, _x, q in a.transitions:
        fwd[p].add(q)
        rev[q].add(p)
    reach = set(a.initial)
    queue = list(reach)
    while queue:
        p = queue.pop()
        for q in fwd[p]:
            if q not in reach:
                reach.add(q)
                queue.append(q)
    co = set(a.final)
    queue = list(co)
    while queue:
        q = queue.pop()
        for p in rev[q]:
            if p not in co:
                co.add(p)
                queue.append(p)
    keep = sorted(reach & co)
    if not keep:
        return empty_nfa(a.alphabet)
    idx = {p: i for i, p in enumerate(keep)}
    trans = {(idx[p], x, idx[q]) for p, x, q in a.transitions
             if p in idx and q in idx}
    return Nfa(a.alphabet, len(keep), frozenset(trans),
               frozenset(idx[p] for p in a.initial if p in idx),
               frozenset(idx[p] for p in a.final if p in idx))


def prefix_closure(a: Nfa) -> Nfa:
    t = trim(a)
    if not t.transitions and not t.final:
        return t
    return Nfa(t.alphabet, t.n_states, t.transitions, t.initial,
               frozenset(range(t.n_states)))


def suffix_closure(a: Nfa) -> Nfa:
    t = trim(a)
    if not t.transitions and not t.final:
        return t
    return Nfa(t.alphabet, t.n_states, t.transitions,
               frozenset(range(t.n_states)), t.final)


def factor_closure(a: Nfa) -> Nfa:
    t = trim(a)
    if not t.transitions and not t.final:
        return t
    everything = frozenset(range(t.n_states))
    return Nfa(t.alphabet, t.n_states, t.transitions, everything, everything)


def enumerate_words(a: Nfa | Dfa, max_len: int) -> list[tuple[int, ...]]:
    """All accepted words of length <= max_len in length-lex order."""
    a = as_nfa(a)
    eps, step = _adjacency(a)
    fmask = _mask(a.final)
    out = []
    level = [((), _closure(eps, _mask(a.initial)))]
    if not level[0][1]:
        return []
    for length in range(max_len + 1):
        nxt = []
        for word, mask in level:
            if mask & fmask:
                out.append(word)
            if length < max_len:
                for x in range(a.alphabet.size):
                    m = _move(step, eps, mask, x)
                    if m:
                        nxt.append((word + (x,), m))
        level = nxt
    return out


def relabel(a: Nfa, target: Alphabet, letter_map) -> Nfa:
    """Transport an automaton onto another alphabet via a letter map."""
    trans = {(p, None if x is None else letter_map[x], q)
             for p, x, q in a.transitions}
    return Nfa(target, a.n_states, frozenset(trans), a.initial, a.final)


def embed_hat(a: Nfa, target: HatAlphabet) -> Nfa:
    """Embed an automaton over a hat sub-alphabet into a larger hat alphabet,
    matching letters by symbol name and bar sign."""
    if not isinstance(a.alphabet, HatAlphabet):
        raise NotInvolutive("embedding requires a hat alphabet")
    lm = {}
    for x in range(a.alphabet.size):
        lm[x] = target.letter(a.alphabet.name(x))
    return relabel(a, target, lm)


def sub_hat_letters(target: HatAlphabet, base_symbols) -> list[int]:
    """The letters of target covering the hat alphabet of the given base."""
    out = []
    for b in base_symbols:
        out.append(target.letter(b))
    for b in base_symbols:
        out.append(target.letter("~" + b))
    return out


def render_word(alphabet: Alphabet, word) -> str:
    if not word:
        return "-"
    return " ".join(alphabet.name(x) for x in word)


def parse_word(alphabet: Alphabet, text: str) -> tuple[int, ...]:
    text = text.strip()
    if text == "-" or not text:
        return ()
    return tuple(alphabet.letter(tok) for tok in text.split())


# -- text format and DOT ------------------------------------------------------

def format_automaton(a: Nfa | Dfa) -> str:
    a = as_nfa(a)
    lines = [f"states {a.n_states}"]
    if isinstance(a.alphabet, HatAlphabet):
        lines.append("alphabet " + " ".join(a.alphabet.base))
    else:
        lines.append("alphabet " + " ".join(a.alphabet.symbols))
    lines.append("initial " + " ".join(str(q) for q in sorted(a.initial)))
    lines.append("final " + " ".join(str(q) for q in sorted(a.final)))
    for p, x, q in sorted(a.transitions,
                          key=lambda t: (t[0], -1 if t[1] is None else t[1], t[2])):
        lines.append(f"{p} {'-' if x is None else a.alphabet.name(x)} {q}")
    return "\n".join(lines) + "\n"


def parse_automaton_text(text: str) -> Nfa:
    raw = text.splitlines()
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(raw) if ln.strip()]
    n_states = None
    base: list[str] | None = None
    initial: list[int] = []
    final: list[int] = []
    trans_lines = []
    for no, ln in lines:
        toks = ln.split()
        if toks[0] == "states":
            try:
                n_states = int(toks[1])
            except (IndexError, ValueError):
                raise ParseError("bad states line", no) from None
        elif toks[0] == "alphabet":
            base = toks[1:]
        elif toks[0] == "initial":
            initial = [int(t) for t in toks[1:]]
        elif toks[0] == "final":
            final = [int(t) for t in toks[1:]]
        elif len(toks) == 3:
            trans_lines.append((no, toks))
        else:
            raise ParseError(f"unexpected line {ln!r}", no)
    if n_states is None:
        raise ParseError("missing states line", 1)
    if base is None:
        seen = []
        for _no, (_p, sym, _q) in trans_lines:
            if sym == "-":
                continue
            b = sym[1:] if sym.startswith("~") else sym
            if b not in seen:
                seen.append(b)
        base = sorted(seen)
    alphabet = HatAlphabet(tuple(base))
    trans = set()
    for no, (p, sym, q) in trans_lines:
        try:
            pi, qi = int(p), int(q)
        except ValueError:
            raise ParseError(f"bad state in transition {p} {sym} {q}", no) from None
        letter = None if sym == "-" else alphabet.letter(sym)
        if not (0 <= pi < n_states and 0 <= qi < n_states):
            raise ParseError(f"state out of range in {p} {sym} {q}", no)
        trans.add((pi, letter, qi))
    try:
        return Nfa(alphabet, n_states, frozenset(trans),
                   frozenset(initial), frozenset(final))
    except LanguageError as e:
        raise ParseError(str(e), lines[0][0] if lines else 1) from None


def automaton_dot(a: Nfa | Dfa, name: str = "automaton") -> str:
    a = as_nfa(a)
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    for q in range(a.n_states):
        shape = "doublecircle" if q in a.final else "circle"
        lines.append(f'  q{q} [label="{q}", shape={shape}];')
    for i in sorted(a.initial):
        lines.append(f"  start{i} [shape=point];")
        lines.append(f"  start{i} -> q{i};")
    for p, x, q in sorted(a.transitions,
                          key=lambda t: (t[0], -1 if t[1] is None else t[1], t[2])):
        lab = "ε" if x is None else a.alphabet.name(x)
        lines.append(f'  q{p} -> q{q} [label="{lab}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
