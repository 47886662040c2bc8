class RingMismatchError(ValueError):
    def __init__(self, left, right, operation="operation"):
        self.left, self.right = left, right
        super().__init__("{} between different rings: {} and {}".format(operation, left, right))


class ParseError(ValueError):
    """ Syntax error in an expression, `position` is a 0-based character offset into `text`. """

    def __init__(self, message, text="", position=0, expected=None):
        self.message, self.text, self.position, self.expected = message, text, position, expected
        expected_msg = "" if expected is None else ", expected {}".format(expected)
        super().__init__("{} at position {}{}: {!r}".format(message, position, expected_msg, text))


class UnknownVariableError(ParseError):
    def __init__(self, name, text="", position=0, variables=()):
        self.name = name
        super().__init__("unknown variable {!r}".format(name), text, position, expected="one of {}".format(", ".join(variables)))


class BudgetExceededError(RuntimeError):
    """ A Groebner computation hit its reduction budget. This is never a mathematical answer. """

    def __init__(self, budget, reductions, pairs_processed):
        self.budget, self.reductions, self.pairs_processed = budget, reductions, pairs_processed
        super().__init__("reduction budget {} exceeded after {} reductions and {} pairs".format(budget, reductions, pairs_processed))


class NonHomogeneousError(ValueError):
    def __init__(self, poly, weights):
        self.poly, self.weights = poly, weights
        super().__init__("{} is not homogeneous for weights {}".format(poly, [str(ii) for ii in weights]))


class HypothesisMissingError(ValueError):
    def __init__(self, missing, consumer):
        self.missing, self.consumer = tuple(missing), consumer
        super().__init__("{} needs asserted hypotheses: {}".format(consumer, ", ".join(self.missing)))
