import numpy as np


class SpanTracker:
    """
    Incremental row echelon form over F_p on int64 arrays. Rows are kept monic at their pivot column,
    pivots are taken as the first nonzero column, so results only depend on insertion order.
    """

    def __init__(self, p, dim):
        if p >= 2**31:
            raise ValueError("p = {} too large for int64 elimination".format(p))
        self.p, self.dim = p, dim
        self.rows, self.pivots = [], []

    @property
    def rank(self):
        return len(self.rows)

    def __as_vector__(self, vec):
        vec = np.asarray(vec, dtype=np.int64) % self.p
        if vec.shape != (self.dim,):
            raise ValueError("Expected a vector of length {}, got shape {}".format(self.dim, vec.shape))
        return vec

    def reduce(self, vec):
        vec = self.__as_vector__(vec)
        for row, pivot in zip(self.rows, self.pivots):
            factor = vec[pivot]
            if factor:
                vec = (vec - factor * row) % self.p
        return vec

    def contains(self, vec):
        return not self.reduce(vec).any()

    def add(self, vec):
        """ True if `vec` enlarged the span """
        vec = self.reduce(vec)
        nonzero = np.flatnonzero(vec)
        if len(nonzero) == 0:
            return False
        pivot = int(nonzero[0])
        inverse = pow(int(vec[pivot]), -1, self.p)
        self.rows.append(vec * inverse % self.p)
        self.pivots.append(pivot)
        return True

    def extend(self, vectors):
        return [self.add(vec) for vec in vectors]


def rank_mod_p(vectors, p, dim=None):
    vectors = [np.asarray(ii, dtype=np.int64) for ii in vectors]
    if len(vectors) == 0:
        return 0
    tracker = SpanTracker(p, len(vectors[0]) if dim is None else dim)
    tracker.extend(vectors)
    return tracker.rank
