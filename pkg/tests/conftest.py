"""Shared test configuration: one hypothesis profile for the whole suite."""

from hypothesis import HealthCheck, settings

settings.register_profile(
    "bcfrac",
    deadline=None,
    max_examples=100,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("bcfrac")
