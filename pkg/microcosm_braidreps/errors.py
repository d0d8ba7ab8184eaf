"""
Braid representation errors.

Errors define an `exit_code` for translation to the command line (0 pass, 1 failed
verification, 2 usage) but are not coupled with argparse.

"""


class BraidRepsError(Exception):
    """
    Base error; the inputs were rejected before or during computation.

    """
    @property
    def exit_code(self):
        # usage error
        return 2


class RingError(BraidRepsError):
    """
    A scalar operation left the ring: exponent overflow, a non-unit divisor or an inexact quotient.

    """
    pass


class ShapeError(BraidRepsError):
    """
    Matrix shapes are incompatible for the requested operation.

    """
    pass


class NotInvertibleError(BraidRepsError):
    """
    The determinant of a matrix is not a unit of the Laurent ring.

    """
    def __init__(self, determinant):
        super(NotInvertibleError, self).__init__(
            "matrix is not invertible over the Laurent ring: determinant is {}".format(determinant),
        )
        self.determinant = determinant


class NotNilpotentError(BraidRepsError):
    """
    The q-exponential was requested for a matrix that is not nilpotent.

    """
    pass


class DivisionFailureError(BraidRepsError):
    """
    A q-factorial does not divide a matrix power exactly (typically (m)_q = 0 at a root of unity).

    """
    pass


class SizeLimitError(BraidRepsError):
    """
    A symbolic determinant was requested beyond the configured size.

    """
    pass


class ParameterError(BraidRepsError):
    """
    A representation parameter (n, q, t, lambda, D, gamma, epsilon) is invalid.

    """
    pass


class LambdaConditionError(ParameterError):
    """
    The lambda vector violates the pairing condition.

    """
    def __init__(self, violations):
        super(LambdaConditionError, self).__init__(
            "lambda condition fails for r in {}".format([violation.r for violation in violations]),
        )
        self.violations = violations


class WordError(BraidRepsError):
    """
    A braid word does not fit the representation it is evaluated in.

    """
    pass


class ParseError(BraidRepsError):
    """
    Text input could not be parsed; carries the offending position.

    """
    def __init__(self, message, text, position):
        super(ParseError, self).__init__(
            "{} at position {} in {!r}".format(message, position, text),
        )
        self.message = message
        self.text = text
        self.position = position


class InvarianceError(BraidRepsError):
    """
    An operator does not map the span of a basis into itself.

    """
    def __init__(self, index, image):
        super(InvarianceError, self).__init__(
            "image of basis vector {} leaves the span: {}".format(index, image),
        )
        self.index = index
        self.image = image


class FamilyNotFoundError(BraidRepsError):
    """
    The requested representation family is not registered.

    """
    pass


class VerificationFailure(BraidRepsError):
    """
    A verification ran to completion and found a counterexample.

    """
    @property
    def exit_code(self):
        # failed check
        return 1
