"""Exception hierarchy shared by all rightcon modules."""


class RightconError(Exception):
    """Base class for all library errors."""


class ValidationError(RightconError):
    """An acceptor or structure violates a construction invariant."""


class EmptyAlphabet(ValidationError):
    pass


class IncompleteTransition(ValidationError):
    def __init__(self, state, symbol):
        super().__init__(f"missing transition delta({state}, {symbol})")
        self.state = state
        self.symbol = symbol


class DanglingReference(ValidationError):
    def __init__(self, kind, ref):
        super().__init__(f"acceptance refers to unknown {kind}: {ref!r}")
        self.kind = kind
        self.ref = ref


class UnknownSymbol(RightconError):
    def __init__(self, symbol):
        super().__init__(f"symbol {symbol!r} not in alphabet")
        self.symbol = symbol


class AlphabetMismatch(RightconError):
    pass


class CapacityExceeded(RightconError):
    """An enumeration grew past its configured capacity bound."""

    def __init__(self, what, limit):
        super().__init__(f"{what} exceeded capacity limit {limit}")
        self.what = what
        self.limit = limit


class UnsupportedConversion(RightconError):
    def __init__(self, source, target):
        super().__init__(f"no structure-preserving conversion {source} -> {target}")
        self.source = source
        self.target = target


class NotWeak(RightconError):
    pass


class NotTrivial(RightconError):
    pass


class NotMuller(RightconError):
    pass


class UnknownFixture(RightconError):
    def __init__(self, name):
        super().__init__(f"unknown fixture {name!r}")
        self.name = name


class SamplingExhausted(RightconError):
    pass


class ParseError(RightconError):
    def __init__(self, line_no, reason):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason
