"""Exception hierarchy for malformed compressed input."""


class MalformedInputError(ValueError):
    """Base class for every decode-time failure on a corrupt byte stream."""


class TruncatedInputError(MalformedInputError):
    """The stream ended before the declared number of integers was read."""


class OverlongRunError(MalformedInputError):
    """A VByte run (or G8IU integer) spans more bytes than a 32-bit value can."""


class ValueOverflowError(MalformedInputError):
    """A five-byte VByte run decodes to a value of 2**32 or more."""


class TrailingBytesError(MalformedInputError):
    """Bytes remain after the declared number of integers was decoded."""


class BlockStructureError(MalformedInputError):
    """Block framing is inconsistent (e.g. G8IU stream not a multiple of 9)."""


class UnsupportedCodecError(ValueError):
    """The requested operation is not defined for this codec."""


# Container-level errors

class ContainerError(ValueError):
    pass


class BadMagicError(ContainerError):
    pass


class UnknownCodecError(ContainerError):
    pass


class ReservedFlagsError(ContainerError):
    pass


class LengthMismatchError(ContainerError):
    pass


class TruncatedSourceError(ContainerError):
    pass


# Status codes returned by the compiled kernels. Zero or positive means success.
OK = 0
E_TRUNCATED = -1
E_OVERLONG = -2
E_OVERFLOW = -3
E_TRAILING = -4
E_BLOCK = -5

_BY_STATUS = {
    E_TRUNCATED: (TruncatedInputError, "stream ends inside an encoded integer"),
    E_OVERLONG: (OverlongRunError, "encoded integer longer than the format allows"),
    E_OVERFLOW: (ValueOverflowError, "encoded value does not fit in 32 bits"),
    E_TRAILING: (TrailingBytesError, "unconsumed bytes after the last integer"),
    E_BLOCK: (BlockStructureError, "inconsistent block structure"),
}


def raise_for_status(status: int, codec_name: str) -> None:
    if status >= 0:
        return
    cls, msg = _BY_STATUS[status]
    raise cls(f"{codec_name}: {msg}")
