"""Positive and negative instance generators."""

from leonard.instances.generators import (
    GeneratorConfig,
    generate,
    k3_fixture,
    krawtchouk,
    non_example_complete_delta,
    random_context,
    repeated_dual_fixture,
)


__all__ = [
    "GeneratorConfig",
    "generate",
    "k3_fixture",
    "krawtchouk",
    "non_example_complete_delta",
    "random_context",
    "repeated_dual_fixture",
]
