"""Exception taxonomy shared across the package.

Every error raised by the library derives from MultiresError so callers can
catch one base class at the CLI boundary.
"""


class MultiresError(Exception):
    """Base class for all library errors."""


# --- audio ---

class NotWav(MultiresError):
    """File is not a RIFF/WAVE container."""


class UnsupportedFormat(MultiresError):
    """WAV exists but is not mono 16-bit PCM."""


class Truncated(MultiresError):
    """WAV data chunk is missing, empty, or shorter than declared."""


class BadDuration(MultiresError):
    """Synthetic signal duration is non-positive or rounds to zero samples."""


# --- frame-rate arithmetic ---

class MixedSampleRate(MultiresError):
    """Resolutions with different sample rates cannot be combined."""


# --- tensor engine ---

class ShapeMismatch(MultiresError):
    """Operands have incompatible shapes for the requested op."""


class NotScalar(MultiresError):
    """backward() requires a scalar loss tensor."""


# --- encoders ---

class BadConfig(MultiresError):
    """Encoder or run configuration violates an invariant."""


class InputTooShort(MultiresError):
    """Audio too short: some conv layer would produce zero frames."""


# --- fusion ---

class NonIntegerFactor(MultiresError):
    """Upsampling factor does not match the resolution ratio."""


class PyramidMismatch(MultiresError):
    """Feature pyramids disagree on dim, depth, input length, or rate."""


class EmptyFusion(MultiresError):
    """Trimmed fused length is zero."""


class ResolutionOrder(MultiresError):
    """Hierarchical fusion requires strictly coarse-to-fine inputs."""


class BadK(MultiresError):
    """Hierarchical fusion supports two or three encoders only."""


# --- ctc ---

class InadmissibleTarget(MultiresError):
    """Target contains blanks or out-of-range tokens."""


class TooLarge(MultiresError):
    """Instance too big for exhaustive path enumeration."""


# --- cost model ---

class LengthMismatch(MultiresError):
    """Cost reports computed at different input lengths."""


# --- harness ---

class ConfigError(MultiresError):
    """Run config file is malformed; message names the offending field."""


class Divergence(MultiresError):
    """Training loss became NaN or Inf."""
