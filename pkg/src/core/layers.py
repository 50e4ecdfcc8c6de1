"""
Layer Decomposition Module
Detects layered structure through the strand "under" digraph, extracts layers
as braid words of their own, and builds layered diagrams from two braids
"""

import heapq
import logging
from dataclasses import dataclass
from typing import Collection, Dict, Iterable, Iterator, List, Mapping, Sequence, Set, Tuple

from src.core.braid import BraidWord, ou_matrix
from src.core.linalg import IntMatrix, det

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LayerDecomposition:
    """Ordered partition of the strand labels with one extracted word per layer"""

    layers: Tuple[Tuple[int, ...], ...]
    layer_words: Tuple[BraidWord, ...]

    @property
    def k(self) -> int:
        return len(self.layers)

    @property
    def is_layered(self) -> bool:
        return self.k >= 2

    @property
    def is_completely_layered(self) -> bool:
        return all(len(layer) == 1 for layer in self.layers)

    def layer_dets(self) -> List[int]:
        return [det(ou_matrix(w)) for w in self.layer_words]

    def det_product(self) -> int:
        value = 1
        for d in self.layer_dets():
            value *= d
        return value

    def det_product_holds(self, word: BraidWord) -> bool:
        """det(B) equals the product of the layer determinants"""
        return det(ou_matrix(word)) == self.det_product()


def under_digraph(word: BraidWord) -> Dict[int, List[int]]:
    """
    Edge i -> j when strand i passes under strand j at least once

    Returns:
        Adjacency lists keyed by every label 1..n, targets sorted
    """
    m = ou_matrix(word).rows
    n = word.n
    return {i: [j for j in range(1, n + 1) if j != i and m[j - 1][i - 1] > 0] for i in range(1, n + 1)}


def strongly_connected_components(vertices: Iterable[int],
                                  edges: Mapping[int, Collection[int]]) -> List[Tuple[int, ...]]:
    """
    Strongly connected components by the path-based method, without recursion

    A component is emitted only after every component it has an edge into,
    so the list is a reverse topological order of the condensation.

    Args:
        vertices: Strand labels, visited in the given order
        edges: Targets of each label

    Returns:
        Components as sorted label tuples
    """
    index: Dict[int, int] = {}
    assigned: Set[int] = set()
    path: List[int] = []
    boundaries: List[int] = []
    components: List[Tuple[int, ...]] = []
    work: List[Tuple[int, Iterator[int]]] = []

    def enter(v: int):
        index[v] = len(path)
        path.append(v)
        boundaries.append(index[v])
        work.append((v, iter(edges.get(v, ()))))

    for root in vertices:
        if root in index:
            continue
        enter(root)
        while work:
            v, targets = work[-1]
            descended = False
            for w in targets:
                if w not in index:
                    enter(w)
                    descended = True
                    break
                if w not in assigned:
                    # w is still on the path: merge everything above it
                    while index[w] < boundaries[-1]:
                        boundaries.pop()
            if descended:
                continue
            work.pop()
            if boundaries[-1] == index[v]:
                boundaries.pop()
                component = path[index[v]:]
                del path[index[v]:]
                assigned.update(component)
                components.append(tuple(sorted(component)))
    return components


def extract_layer(word: BraidWord, strands: Collection[int]) -> BraidWord:
    """
    The sub-diagram formed by a set of strands, as a braid word of its own

    Only crossings between two strands of the set are kept. A kept crossing
    at full-diagram positions p, p+1 becomes generator 1 + (number of set
    strands currently left of p), with its sign unchanged.

    Args:
        word: Braid word
        strands: Nonempty set of strand labels

    Returns:
        BraidWord on len(strands) strands
    """
    chosen = set(strands)
    if not chosen:
        raise ValueError("Cannot extract a layer from an empty strand set")
    if not chosen <= set(range(1, word.n + 1)):
        raise ValueError(f"Strand set {sorted(chosen)} outside 1..{word.n}")

    live = list(range(1, word.n + 1))
    letters: List[int] = []
    for g in word.letters:
        i = abs(g)
        left, right = live[i - 1], live[i]
        if left in chosen and right in chosen:
            r = 1 + sum(1 for s in live[:i - 1] if s in chosen)
            letters.append(r if g > 0 else -r)
        live[i - 1], live[i] = right, left
    return BraidWord(len(chosen), tuple(letters))


def finest_layering(word: BraidWord) -> LayerDecomposition:
    """
    Finest layer decomposition: strongly connected components of the under digraph

    Components are ordered so that every under-edge points from a later layer
    to an earlier one; among components that are ready at the same time the
    one holding the smallest strand label goes first.

    Args:
        word: Braid word

    Returns:
        LayerDecomposition (one layer means the diagram is not layered)
    """
    graph = under_digraph(word)
    components = strongly_connected_components(sorted(graph), graph)
    owner = {label: idx for idx, comp in enumerate(components) for label in comp}

    # component -> components it points to, and the reverse
    targets: List[Set[int]] = [set() for _ in components]
    sources: List[Set[int]] = [set() for _ in components]
    for u, outs in graph.items():
        for v in outs:
            cu, cv = owner[u], owner[v]
            if cu != cv:
                targets[cu].add(cv)
                sources[cv].add(cu)

    waiting = [len(t) for t in targets]
    ready = [(components[c][0], c) for c in range(len(components)) if waiting[c] == 0]
    heapq.heapify(ready)
    ordered: List[Tuple[int, ...]] = []
    while ready:
        _, c = heapq.heappop(ready)
        ordered.append(components[c])
        for src in sources[c]:
            waiting[src] -= 1
            if waiting[src] == 0:
                heapq.heappush(ready, (components[src][0], src))

    words = tuple(extract_layer(word, layer) for layer in ordered)
    logger.debug(f"Finest layering of {word.n} strands: {ordered}")
    return LayerDecomposition(tuple(ordered), words)


def is_valid_layering(word: BraidWord, layers: Sequence[Collection[int]]) -> bool:
    """
    Check the layering condition: no strand of an earlier layer passes under
    a strand of a later layer, and the layers partition 1..n
    """
    flat = [s for layer in layers for s in layer]
    if any(len(layer) == 0 for layer in layers) or sorted(flat) != list(range(1, word.n + 1)):
        return False
    m = ou_matrix(word).rows
    for l_idx, earlier in enumerate(layers):
        for later in layers[l_idx + 1:]:
            for si in earlier:
                for sj in later:
                    # wd(si, sj): si under sj
                    if m[sj - 1][si - 1] != 0:
                        return False
    return True


def is_layered(word: BraidWord) -> bool:
    return finest_layering(word).is_layered


def is_completely_layered(word: BraidWord) -> bool:
    return finest_layering(word).is_completely_layered


def layered_compose(first: BraidWord, second: BraidWord, interleave: Sequence[int]) -> BraidWord:
    """
    Layered diagram B1 + B2 with the layer-1 strands over the layer-2 strands

    B1 runs on positions 1..n1 and B2, shifted, on positions n1+1..n, so the
    layers are S1 = {1..n1} and S2 = {n1+1..n}. A shuffle block follows:
    ``interleave[p - 1]`` (1 or 2) names the layer of the slot p the strands
    are carried to, each layer keeping its internal left-to-right order.
    Layer-2 strands move leftward through negative letters, so the
    stationary layer-1 strand is over at every shuffle crossing.

    Args:
        first: Layer-1 braid word
        second: Layer-2 braid word
        interleave: Layer tag per slot

    Returns:
        BraidWord on n1 + n2 strands layered as (S1, S2)
    """
    n1, n2 = first.n, second.n
    tags = list(interleave)
    if len(tags) != n1 + n2 or tags.count(1) != n1 or tags.count(2) != n2:
        raise ValueError(f"Interleave {tuple(interleave)} must hold {n1} ones and {n2} twos")

    letters: List[int] = list(first.letters)
    letters.extend(g + n1 if g > 0 else g - n1 for g in second.letters)

    slots = [p for p, tag in enumerate(tags, 1) if tag == 2]
    for k, slot in enumerate(slots):
        # the k-th layer-2 strand still sits at n1 + k + 1; layer-1 strands fill slot..there
        for p in range(n1 + k, slot - 1, -1):
            letters.append(-p)
    return BraidWord(n1 + n2, tuple(letters))


def block_view(word: BraidWord, layers: Sequence[Collection[int]]) -> Tuple[IntMatrix, List[List[int]], IntMatrix]:
    """
    Blocks of the OU matrix for an order listing layer 1 then layer 2

    Args:
        word: Braid word
        layers: A valid 2-layering (S1, S2)

    Returns:
        (M1, N, M2): the diagonal blocks and the upper-right block

    Raises:
        ValueError: if (S1, S2) is not a valid layering
    """
    if len(layers) != 2 or not is_valid_layering(word, layers):
        raise ValueError(f"Not a valid 2-layering: {[sorted(s) for s in layers]}")
    s1, s2 = sorted(layers[0]), sorted(layers[1])
    full = ou_matrix(word).permute(s1 + s2)
    k = len(s1)
    top, bottom = range(k), range(k, word.n)

    lower_left = full.block(bottom, top)
    if any(v for row in lower_left for v in row):
        raise ValueError("Lower-left block is not zero")

    m1 = IntMatrix(tuple(tuple(r) for r in full.block(top, top)))
    m2 = IntMatrix(tuple(tuple(r) for r in full.block(bottom, bottom)))
    for block, strands in ((m1, s1), (m2, s2)):
        if block != ou_matrix(extract_layer(word, strands)):
            raise RuntimeError(f"Layer block disagrees with the extracted layer {strands}")
    return m1, full.block(top, bottom), m2
