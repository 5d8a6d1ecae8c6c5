"""Exception hierarchy shared across the package."""


class RubikMapError(Exception):
    """Base class for all errors raised by this package."""


# --- map construction / IO ---

class MalformedInput(RubikMapError):
    """Input data does not describe a dart system (missing/duplicate darts, bad keys)."""


class NotTrivalent(MalformedInput):
    """A vertex rotation cycle has length different from 3."""


class NotInvolution(MalformedInput):
    """The edge pairing has a fixed point or a repeated dart."""


class Disconnected(MalformedInput):
    """The dart system splits into more than one connected component."""


class ParameterOutOfRange(RubikMapError):
    """A builder parameter is outside its valid range."""


class IoError(RubikMapError):
    """Reading or writing a file failed."""


class FaceNotInMap(RubikMapError):
    """The requested face does not belong to the map."""


# --- permutation engine ---

class DomainMismatch(RubikMapError):
    """Permutations act on different domains."""


class NotAMember(RubikMapError):
    """The permutation is not an element of the group."""


class IllDefinedProjection(RubikMapError):
    """A generator does not induce a permutation on the projected domain."""


class CapExceeded(RubikMapError):
    """Brute-force enumeration exceeded its element cap."""


# --- orientation / shift ---

class DifferentVertices(RubikMapError):
    """The two corners do not sit at the same vertex."""


class NotOrientationPreserving(RubikMapError):
    """The permutation does not preserve vertex triples with their cyclic order."""


# --- verifier ---

class OutOfConjectureScope(RubikMapError):
    """The map has a face of size < 3; the structure conjecture does not apply."""


class BudgetExceeded(RubikMapError):
    """Verification exceeded its time budget."""


# --- play service ---

class UnknownSession(RubikMapError):
    """No session with the given id."""


class UnknownFace(RubikMapError):
    """No face with the given label on the session's map."""


class MalformedRequest(RubikMapError):
    """Request body is structurally invalid."""
