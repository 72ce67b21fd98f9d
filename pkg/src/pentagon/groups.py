"""Finite groups given by Cayley tables, and right G-sets."""

from __future__ import annotations

from itertools import permutations, product

from .errors import NotAGroup


class Group:
    """Elements are ``0..n-1``; ``table[g][h]`` is the product ``gh`` (row = left factor)."""

    def __init__(self, table, name: str = "G"):
        table = tuple(tuple(int(x) for x in row) for row in table)
        n = len(table)
        if n == 0 or any(len(row) != n for row in table):
            raise NotAGroup("Cayley table must be a nonempty square")
        if any(not 0 <= x < n for row in table for x in row):
            raise NotAGroup("Cayley table entries out of range")
        for a, b, c in product(range(n), repeat=3):
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise NotAGroup(f"not associative at ({a}, {b}, {c})")
        units = [e for e in range(n) if all(table[e][g] == g == table[g][e] for g in range(n))]
        if not units:
            raise NotAGroup("no identity element")
        e = units[0]
        inv = []
        for g in range(n):
            hs = [h for h in range(n) if table[g][h] == e]
            if not hs or table[hs[0]][g] != e:
                raise NotAGroup(f"element {g} has no inverse")
            inv.append(hs[0])
        self.table = table
        self.order = n
        self.identity = e
        self.inverse = tuple(inv)
        self.name = name

    def mul(self, g, h):
        return self.table[g][h]

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"Group({self.name}, order={self.order})"


def cyclic(n: int) -> Group:
    return Group([[(a + b) % n for b in range(n)] for a in range(n)], f"C{n}")


def symmetric3() -> Group:
    perms = sorted(permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}

    def compose(p, q):  # (p q)(x) = p(q(x))
        return tuple(p[q[x]] for x in range(3))

    return Group([[index[compose(p, q)] for q in perms] for p in perms], "S3")


def direct_product(G: Group, K: Group) -> Group:
    n, m = G.order, K.order
    table = [[G.mul(a // m, b // m) * m + K.mul(a % m, b % m) for b in range(n * m)]
             for a in range(n * m)]
    return Group(table, f"{G.name}x{K.name}")


def klein4() -> Group:
    g = direct_product(cyclic(2), cyclic(2))
    g.name = "V4"
    return g


def groups_up_to(order: int) -> list[Group]:
    """One group from each isomorphism class of order at most ``min(order, 7)``."""
    known = {1: [cyclic(1)], 2: [cyclic(2)], 3: [cyclic(3)], 4: [cyclic(4), klein4()],
             5: [cyclic(5)], 6: [cyclic(6), symmetric3()], 7: [cyclic(7)]}
    return [g for k in range(1, min(order, 7) + 1) for g in known[k]]


def check_right_action(G: Group, action) -> bool:
    """``action[x][g] = x.g``; checks ``x.e = x`` and ``(x.g).h = x.(gh)``."""
    n = len(action)
    if any(len(row) != G.order for row in action):
        return False
    if any(not 0 <= y < n for row in action for y in row):
        return False
    for x in range(n):
        if action[x][G.identity] != x:
            return False
        for g in range(G.order):
            for h in range(G.order):
                if action[action[x][g]][h] != action[x][G.mul(g, h)]:
                    return False
    return True


def right_actions(G: Group, n: int) -> list[tuple]:
    """Every right action of ``G`` on ``{0..n-1}``, as tables ``action[x][g]``.

    Brute force over assignments of permutations to group elements; meant for
    tiny ``G`` and ``n``.
    """
    perms = list(permutations(range(n)))
    gens = _generators(G)
    found = []
    for images in product(perms, repeat=len(gens)):
        # extend generator images to all of G by breadth-first closure
        assign = {G.identity: tuple(range(n))}
        frontier = [G.identity]
        ok = True
        while frontier and ok:
            nxt = []
            for g in frontier:
                for s, p in zip(gens, images):
                    gs = G.mul(g, s)
                    # right action: x.(gs) = (x.g).s
                    val = tuple(p[assign[g][x]] for x in range(n))
                    if gs in assign:
                        if assign[gs] != val:
                            ok = False
                            break
                    else:
                        assign[gs] = val
                        nxt.append(gs)
                if not ok:
                    break
            frontier = nxt
        if not ok or len(assign) != G.order:
            continue
        table = tuple(tuple(assign[g][x] for g in range(G.order)) for x in range(n))
        if check_right_action(G, table):
            found.append(table)
    return sorted(set(found))


def _generators(G: Group) -> list[int]:
    gens: list[int] = []
    span = {G.identity}
    for g in range(G.order):
        if g in span:
            continue
        gens.append(g)
        span = _closure(G, gens)
        if len(span) == G.order:
            break
    return gens


def _closure(G: Group, gens) -> set:
    seen = {G.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = G.mul(g, s)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return seen


def is_free_transitive(G: Group, action) -> bool:
    n = len(action)
    if n == 0:
        return False
    return sorted(action[0]) == list(range(n)) and n == G.order
