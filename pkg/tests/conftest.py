import pytest

from rubikmap import maps
from rubikmap.presentation import RubikPresentation, rubik_generators

_cache: dict[str, RubikPresentation] = {}


@pytest.fixture
def presentation_of():
    """Session-cached presentations; groups are immutable and shareable."""
    def get(name: str) -> RubikPresentation:
        if name not in _cache:
            _cache[name] = rubik_generators(maps.catalog_map(name))
        return _cache[name]
    return get
