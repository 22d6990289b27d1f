"""Slow reference oracles, independent of the package's vectorised BFS."""
from collections import deque

S_PLUS = ((-1, -1), (1, 0), (0, 1))
T_PLUS = ((1, 1), (1, 0), (0, 1))


def gens(variant, directed):
    plus = S_PLUS if variant == "arrowhead" else T_PLUS
    if directed:
        return plus
    return plus + tuple((-a, -b) for a, b in plus)


def bfs(n, variant, directed, origin=(0, 0)):
    m = 2 ** n
    dist = {origin: 0}
    queue = deque([origin])
    while queue:
        x, y = queue.popleft()
        for a, b in gens(variant, directed):
            w = ((x + a) % m, (y + b) % m)
            if w not in dist:
                dist[w] = dist[(x, y)] + 1
                queue.append(w)
    return dist


def all_pairs_diameter(n, variant, directed):
    m = 2 ** n
    return max(max(bfs(n, variant, directed, (x, y)).values()) for x in range(m) for y in range(m))
