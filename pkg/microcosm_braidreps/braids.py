"""
Braid words, braid group representations and the relation verifier.

"""
from collections import namedtuple

from microcosm_braidreps.errors import ShapeError, WordError
from microcosm_braidreps.matrix import RingMatrix, inverse
from microcosm_braidreps.reports import FAIL, PARTIAL, PASS, RelationFailure, RelationReport


class BraidWord(namedtuple("BraidWord", ["strands", "letters"])):
    """
    A word in the generators of B_n: letter g > 0 is sigma_g, g < 0 is its inverse.

    """
    __slots__ = ()

    def __new__(cls, strands, letters=()):
        strands = int(strands)
        letters = tuple(int(letter) for letter in letters)
        if strands < 2:
            raise WordError("braid words need at least 2 strands, got {}".format(strands))
        for letter in letters:
            if letter == 0 or abs(letter) > strands - 1:
                raise WordError("letter {} is not a generator of B_{}".format(letter, strands))
        return super(BraidWord, cls).__new__(cls, strands, letters)

    def inverse(self):
        return BraidWord(self.strands, [-letter for letter in reversed(self.letters)])

    def __add__(self, other):
        if self.strands != other.strands:
            raise WordError("cannot concatenate words on {} and {} strands".format(self.strands, other.strands))
        return BraidWord(self.strands, self.letters + other.letters)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(str(letter) for letter in self.letters)


class BraidRep:
    """
    Images of the generators sigma_1 .. sigma_{n-1} of B_n.

    A partial representation carries fewer images than generators; relations are not checked
    for it. Inverses are computed on first use.

    """
    def __init__(self, strands, images, family, params=None, partial=False, basis=None):
        images = tuple(images)
        if strands < 2:
            raise ShapeError("representations need at least 2 strands, got {}".format(strands))
        if not images:
            raise ShapeError("representations need at least one image")
        if not partial and len(images) != strands - 1:
            raise ShapeError("B_{} needs {} images, got {}".format(strands, strands - 1, len(images)))
        dim = images[0].rows
        for image in images:
            if image.shape != (dim, dim):
                raise ShapeError("all images must be {}x{} matrices, got {}".format(dim, dim, image.shape))
        self.strands = strands
        self.images = images
        self.family = family
        self.params = dict(params or {})
        self.partial = partial
        self.basis = basis
        self._inverses = {}

    @property
    def dim(self):
        return self.images[0].rows

    def image(self, generator):
        """
        Image of sigma_generator (1-based).

        """
        if not 1 <= generator <= len(self.images):
            raise WordError("generator {} has no image in this {} representation".format(generator, self.family))
        return self.images[generator - 1]

    def inverse_image(self, generator):
        if generator not in self._inverses:
            self._inverses[generator] = inverse(self.image(generator))
        return self._inverses[generator]

    def letter_image(self, letter):
        return self.image(letter) if letter > 0 else self.inverse_image(-letter)

    def substitute(self, **values):
        params = dict(self.params)
        params.update(values)
        return BraidRep(
            strands=self.strands,
            images=[image.substitute(**values) for image in self.images],
            family=self.family,
            params=params,
            partial=self.partial,
            basis=self.basis,
        )

    def to_dict(self):
        return dict(
            family=self.family,
            n=self.strands,
            dim=self.dim,
            partial=self.partial,
            basis=self.basis,
            params={
                name: value.to_text() if hasattr(value, "to_text") else value
                for name, value in sorted(self.params.items())
            },
            images=[image.to_json() for image in self.images],
        )

    def __repr__(self):
        return "BraidRep({}, n={}, dim={})".format(self.family, self.strands, self.dim)


def evaluate_word(rep, word):
    """
    Ordered product of the letter images; the empty word gives the identity.

    """
    if word.strands != rep.strands:
        raise WordError("word on {} strands does not fit B_{}".format(word.strands, rep.strands))
    result = RingMatrix.identity(rep.dim)
    for letter in word.letters:
        result = result.matmul(rep.letter_image(letter))
    return result


def verify_braid_relations(rep):
    """
    Check every adjacent braid relation and every distant commutation exactly.

    """
    if rep.partial:
        return RelationReport(rep.family, rep.strands, rep.dim, PARTIAL, 0, [])

    failures = []
    checked = 0
    count = len(rep.images)
    for i in range(1, count + 1):
        for j in range(i + 1, count + 1):
            left, right = rep.image(i), rep.image(j)
            if j == i + 1:
                relation = "braid"
                difference = left.matmul(right).matmul(left) - right.matmul(left).matmul(right)
            else:
                relation = "commute"
                difference = left.matmul(right) - right.matmul(left)
            checked += 1
            if not difference.is_zero:
                failures.append(RelationFailure(relation, (i, j), difference))

    return RelationReport(
        family=rep.family,
        n=rep.strands,
        dim=rep.dim,
        status=FAIL if failures else PASS,
        checked=checked,
        failures=failures,
    )
