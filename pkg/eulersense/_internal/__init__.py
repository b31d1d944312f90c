"""Internal utilities shared across eulersense subpackages. Not part of the public API."""
