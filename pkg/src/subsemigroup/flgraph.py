"""The first-letter graph: one labeled edge per (letter, generator) pair.

The graph tracks only where each generator sends the first letter of each
image, which is enough to classify letters: letters on directed cycles are
the recurrent ones, their strongly connected components order the limit
sets of letters by reachability, and components that no walk can leave are
exactly the minimal ones.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError
from .semigroup import GeneratorSet


@dataclass(frozen=True)
class FirstLetterGraph:
    """Vertices are letters; edge ``(a, b, name)`` means generator ``name`` sends
    the first letter of ``a``'s image to ``b``."""

    letters: tuple[str, ...]
    edges: tuple[tuple[str, str, str], ...]

    def successors(self, ch: str) -> list[str]:
        return [b for a, b, _ in self.edges if a == ch]


@dataclass(frozen=True)
class ComponentDecomposition:
    """Strongly connected components over the recurrent letters.

    ``components`` lists the cyclic components in order of least letter;
    ``terminal`` flags those no edge leaves; ``non_recurrent`` collects the
    letters that sit on no directed cycle and so belong to no component.
    """

    components: tuple[tuple[str, ...], ...]
    terminal: tuple[bool, ...]
    non_recurrent: tuple[str, ...]

    def recurrent_letters(self) -> tuple[str, ...]:
        return tuple(ch for comp in self.components for ch in comp)

    def terminal_components(self) -> tuple[tuple[str, ...], ...]:
        return tuple(c for c, t in zip(self.components, self.terminal) if t)

    def component_of(self, ch: str) -> tuple[str, ...] | None:
        for comp in self.components:
            if ch in comp:
                return comp
        return None


def build(gens: GeneratorSet) -> FirstLetterGraph:
    """First-letter graph of a generator set; exactly one edge per pair."""
    edges = tuple(
        (ch, g.image(ch)[0], g.name)
        for ch in gens.alphabet
        for g in gens
    )
    return FirstLetterGraph(gens.alphabet.letters, edges)


def _tarjan(letters: tuple[str, ...], succ: dict[str, list[str]]) -> list[list[str]]:
    """Iterative Tarjan; components come out in reverse topological order."""
    index: dict[str, int] = {}
    lowlink: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    components: list[list[str]] = []
    counter = 0

    for root in letters:
        if root in index:
            continue
        work = [(root, iter(succ[root]))]
        index[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = lowlink[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ[w])))
                    advanced = True
                    break
                if w in on_stack:
                    lowlink[v] = min(lowlink[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
            if lowlink[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                components.append(comp)
    return components


def decompose(graph: FirstLetterGraph) -> ComponentDecomposition:
    """Classify letters into cyclic components, terminal flags and the rest.

    A singleton counts as a component only if it carries a loop; letters on
    no cycle are reported separately rather than forced into components.
    """
    succ: dict[str, list[str]] = {ch: [] for ch in graph.letters}
    loops: set[str] = set()
    for a, b, _ in graph.edges:
        succ[a].append(b)
        if a == b:
            loops.add(a)

    order = {ch: i for i, ch in enumerate(graph.letters)}
    cyclic: list[tuple[str, ...]] = []
    non_recurrent: list[str] = []
    for comp in _tarjan(graph.letters, succ):
        if len(comp) > 1 or comp[0] in loops:
            cyclic.append(tuple(sorted(comp, key=order.get)))
        else:
            non_recurrent.append(comp[0])
    cyclic.sort(key=lambda comp: order[comp[0]])

    terminal = []
    for comp in cyclic:
        members = set(comp)
        terminal.append(
            all(b in members for a, b, _ in graph.edges if a in members)
        )
    return ComponentDecomposition(
        components=tuple(cyclic),
        terminal=tuple(terminal),
        non_recurrent=tuple(sorted(non_recurrent, key=order.get)),
    )


def limitset_order(graph: FirstLetterGraph) -> set[tuple[str, str]]:
    """Pairs ``(a, b)`` joined by a nonempty directed walk from ``a`` to ``b``.

    Downstream meaning: the limit set of ``b`` is contained in the limit
    set of ``a``; two letters in one component get both pairs, hence equal
    limit sets.
    """
    succ = {ch: set() for ch in graph.letters}
    for a, b, _ in graph.edges:
        succ[a].add(b)
    pairs: set[tuple[str, str]] = set()
    for a in graph.letters:
        reached: set[str] = set()
        frontier = set(succ[a])
        while frontier:
            reached |= frontier
            frontier = {c for b in frontier for c in succ[b]} - reached
        pairs.update((a, b) for b in reached)
    return pairs


def reachability_steps(graph: FirstLetterGraph, a: str, b: str) -> int | None:
    """Length of a shortest nonempty walk from ``a`` to ``b``, or None."""
    if a not in graph.letters or b not in graph.letters:
        raise ValidationError("letters must belong to the graph")
    succ: dict[str, set[str]] = {ch: set() for ch in graph.letters}
    for u, v, _ in graph.edges:
        succ[u].add(v)
    frontier = {a}
    seen: set[str] = set()
    steps = 0
    while frontier:
        steps += 1
        frontier = {v for u in frontier for v in succ[u]} - seen
        if b in frontier:
            return steps
        seen |= frontier
    return None


def dot_export(graph: FirstLetterGraph, decomposition: ComponentDecomposition) -> str:
    """Graphviz DOT rendering; terminal components become clusters.

    The output is byte-stable: vertices in alphabet order, edges in
    (letter, generator-name) order, clusters in component order.
    """
    lines = ["digraph first_letter_graph {"]
    clustered: set[str] = set()
    cluster_id = 0
    for comp, term in zip(decomposition.components, decomposition.terminal):
        if not term:
            continue
        lines.append(f"  subgraph cluster_{cluster_id} {{")
        lines.append('    label="terminal";')
        for ch in comp:
            lines.append(f'    "{ch}";')
            clustered.add(ch)
        lines.append("  }")
        cluster_id += 1
    for ch in graph.letters:
        if ch not in clustered:
            lines.append(f'  "{ch}";')
    for a, b, name in sorted(
        graph.edges,
        key=lambda e: (graph.letters.index(e[0]), e[2], graph.letters.index(e[1])),
    ):
        lines.append(f'  "{a}" -> "{b}" [label="{name}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
