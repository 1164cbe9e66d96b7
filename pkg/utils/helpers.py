from typing import Optional


def truncate_text(text: str, max_length: int) -> str:
    """Truncate text to max_length and add ellipsis if needed"""
    if not text:
        return "(empty)"
    if len(text) <= max_length:
        return text
    return f"{text[:max_length-3]}..."


def format_dt(seconds: float) -> str:
    """Human readable wall time: microseconds up to minutes"""
    if seconds < 1e-3:
        return f"{seconds * 1e6:.1f}us"
    if seconds < 1:
        return f"{seconds * 1e3:.2f}ms"
    if seconds < 60:
        return f"{seconds:.3f}s"
    minutes, rest = divmod(seconds, 60)
    return f"{int(minutes)}m {rest:.1f}s"


def compared_dt(ours: float, reference: Optional[float]) -> str:
    """Relative speed of `ours` against a reference timing"""
    if not reference or not ours:
        return "n/a"
    ratio = reference / ours
    if ratio >= 1:
        return f"{ratio:.1f}x faster"
    return f"{1 / ratio:.1f}x slower"
