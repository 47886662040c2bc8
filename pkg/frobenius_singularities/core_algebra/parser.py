"""
Expression grammar: identifiers `[A-Za-z][A-Za-z0-9_]*`, integer literals, `+ - * ^`, parentheses.
`^` binds tightest, unary minus is allowed, whitespace is insignificant.

Integer literals are plain digit runs, leading zeros allowed. The text is checked against that, leading zeros
are blanked, `^` is rewritten to `**` and the result is handed to the `ast` module. Node positions are mapped
back to offsets in the original text.
"""
import ast
import re
from frobenius_singularities.core_algebra.errors import ParseError, UnknownVariableError

ALLOWED_CHARS_RE = re.compile(r"[^A-Za-z0-9_+\-*^()\s]")
NUMBER_RE = re.compile(r"(?<![A-Za-z0-9_])\d+(?P<tail>[A-Za-z0-9_]*)")
LEADING_ZEROS_RE = re.compile(r"(?<![A-Za-z0-9_])0+(?=\d)")


def __position_map__(text):
    """ Offset in the rewritten text -> offset in `text` """
    out = []
    for id, char in enumerate(text):
        out.extend([id, id] if char == "^" else [id])
    out.append(len(text))
    return out


def __check_characters__(text):
    bad = ALLOWED_CHARS_RE.search(text)
    if bad is not None:
        raise ParseError("unexpected character {!r}".format(bad.group()), text, bad.start(), expected="identifier, integer, operator or parenthesis")
    if "**" in text:
        raise ParseError("use ^ for powers", text, text.index("**"), expected="^")
    for number in NUMBER_RE.finditer(text):
        if len(number.group("tail")) != 0:
            raise ParseError("invalid integer literal", text, number.start(), expected="digits")


def parse_expression_tree(text):
    """ Returns `(ast node, position map)`, raising `ParseError` with the original position """
    __check_characters__(text)
    flat = LEADING_ZEROS_RE.sub(lambda mm: " " * len(mm.group()), re.sub(r"\s", " ", text))
    positions = __position_map__(flat)
    rewritten = flat.replace("^", "**")
    if len(rewritten.strip()) == 0:
        raise ParseError("empty expression", text, 0, expected="an expression")
    try:
        tree = ast.parse("(" + rewritten + ")", mode="eval")
    except SyntaxError as ee:
        # offset counts the added "(", and is 1-based
        offset = 0 if ee.offset is None else max(ee.offset - 2, 0)
        offset = positions[min(offset, len(positions) - 1)]
        raise ParseError("invalid syntax", text, offset, expected="operand or operator") from None
    return tree.body, lambda node: positions[min(max(node.col_offset - 1, 0), len(positions) - 1)]


def __exponent_value__(node, text, position_of):
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return node.value
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        raise ParseError("negative exponent", text, position_of(node), expected="nonnegative integer")
    raise ParseError("exponent must be an integer literal", text, position_of(node), expected="nonnegative integer")


def __evaluate__(node, ring, text, position_of):
    if isinstance(node, ast.Constant):
        if not isinstance(node.value, int) or isinstance(node.value, bool):
            raise ParseError("unsupported literal", text, position_of(node), expected="integer")
        return ring.constant(node.value)
    if isinstance(node, ast.Name):
        if node.id not in ring.index:
            raise UnknownVariableError(node.id, text, position_of(node), ring.variables)
        return ring.gen(node.id)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        operand = __evaluate__(node.operand, ring, text, position_of)
        return -operand if isinstance(node.op, ast.USub) else operand
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            base = __evaluate__(node.left, ring, text, position_of)
            return base ** __exponent_value__(node.right, text, position_of)
        left, right = __evaluate__(node.left, ring, text, position_of), __evaluate__(node.right, ring, text, position_of)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
    raise ParseError("unsupported expression", text, position_of(node), expected="+, -, * or ^")


def parse_poly(text, ring):
    """
    Parse `text` into a Polynomial of `ring`.

    Example:
    >>> from frobenius_singularities.core_algebra import PolyRing, parse_poly
    >>> ring = PolyRing(5, "T, U, V, W", weights=[1, 4, 4, 4])
    >>> print(parse_poly("T^8 - U*V", ring))
    # T^8 - U*V
    """
    node, position_of = parse_expression_tree(text)
    return __evaluate__(node, ring, text, position_of)


def parse_poly_list(text, ring):
    """ Comma separated expressions, e.g. the relations of a ring file """
    return [parse_poly(ii, ring) for ii in text.split(",") if len(ii.strip()) != 0]
