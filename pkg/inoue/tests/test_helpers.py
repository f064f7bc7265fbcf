# Licensed under a 3-clause BSD style license - see LICENSE.rst
import pytest

from inoue import InadmissibleError, InoueWarning
from inoue.conjugacy import are_similar
from inoue.helpers import classproperty, conjugacy_search, ideal_search
from inoue.intmat import IMat
from inoue.tests.helper import catch_warnings


class TestIdealSearch:
    """Test the methods to control the ideal class search."""
    def setup_method(self):
        self.settings = ideal_search.get()

    def teardown_method(self):
        ideal_search.set(**self.settings)

    def test_defaults(self):
        ideal_search.set()
        assert ideal_search.get() == {'norm_bound': None, 'height': 50,
                                      'max_norm_bound': 4096, 'max_box': 10**7}
        assert ideal_search.height == 50
        assert ideal_search.max_norm_bound == 4096
        assert ideal_search.max_box == 10**7

    def test_singleton(self):
        with pytest.raises(RuntimeError, match='singleton'):
            ideal_search()

    def test_set_reset(self, monkeypatch):
        monkeypatch.delenv('INOUE_NORM_BOUND', raising=False)
        ideal_search.set(norm_bound=10, height=7)
        assert ideal_search.norm_bound_for(-83) == 10
        assert ideal_search.height == 7
        ideal_search.set()
        assert ideal_search.norm_bound_for(-83) == 3
        assert ideal_search.height == 50

    def test_minkowski(self, monkeypatch):
        monkeypatch.delenv('INOUE_NORM_BOUND', raising=False)
        ideal_search.set()
        assert 0.2829 < ideal_search.minkowski_constant < 0.2830
        assert ideal_search.default_norm_bound(-83) == 3
        assert ideal_search.default_norm_bound(-23) == 2

    def test_environment(self, monkeypatch):
        ideal_search.set()
        monkeypatch.setenv('INOUE_NORM_BOUND', '17')
        assert ideal_search.env_norm_bound == 17
        assert ideal_search.norm_bound_for(-83) == 17
        # An explicit setting wins.
        ideal_search.set(norm_bound=5)
        assert ideal_search.norm_bound_for(-83) == 5

    @pytest.mark.parametrize('value', ['-3', 'many'])
    def test_bad_environment(self, monkeypatch, value):
        ideal_search.set()
        monkeypatch.setenv('INOUE_NORM_BOUND', value)
        with catch_warnings(InoueWarning) as w:
            assert ideal_search.norm_bound_for(-83) == 3
        assert len(w) == 1
        assert 'INOUE_NORM_BOUND' in str(w[0].message)

    @pytest.mark.parametrize('settings, match', [
        (dict(norm_bound=0), 'norm_bound'),
        (dict(height=-1), 'height'),
        (dict(max_norm_bound=2.5), 'max_norm_bound'),
        (dict(max_box=0), 'max_box')])
    def test_validation(self, settings, match):
        ideal_search.set(norm_bound=10)
        with pytest.raises(InadmissibleError, match=match):
            ideal_search.set(**settings)
        # Check the settings are not corrupted.
        assert ideal_search.get()['norm_bound'] == 10

    def test_unknown_setting(self):
        with pytest.raises(TypeError, match='colour'):
            ideal_search.validate(colour=3)

    def test_explicit_bound(self, monkeypatch):
        monkeypatch.setenv('INOUE_NORM_BOUND', '17')
        assert ideal_search.norm_bound_for(-83, 4) == 4
        with pytest.raises(InadmissibleError, match='positive integer'):
            ideal_search.norm_bound_for(-83, 0)


class TestConjugacySearch:
    def setup_method(self):
        self.settings = conjugacy_search.get()

    def teardown_method(self):
        conjugacy_search.set(**self.settings)

    def test_set_reset(self):
        conjugacy_search.set(max_length=3, entry_cap=100, max_states=50)
        assert conjugacy_search.get() == {'max_length': 3, 'entry_cap': 100,
                                          'max_states': 50}
        conjugacy_search.set()
        assert conjugacy_search.get() == {'max_length': 20, 'entry_cap': 10**6,
                                          'max_states': 200000}

    def test_validation(self):
        with pytest.raises(InadmissibleError, match='max_states'):
            conjugacy_search.set(max_states=0)
        assert conjugacy_search.get() == self.settings

    def test_limits_search(self):
        # M = T⁶·N·T⁻⁶ needs a longer word than one generator.
        N, M = IMat([[1, 1], [1, 2]]), IMat([[7, -29], [1, -4]])
        assert are_similar(N, M).similar
        conjugacy_search.set(max_length=1)
        assert are_similar(N, M, method='bfs').similar is None


class TestClassproperty:
    def test_lazy(self):
        calls = []

        class Cached:
            @classproperty(lazy=True)
            def value(cls):
                calls.append(cls)
                return len(calls)

        assert Cached.value == 1
        assert Cached.value == 1
        assert calls == [Cached]

    def test_not_cached(self):
        calls = []

        class Live:
            @classproperty
            def value(cls):
                calls.append(cls)
                return len(calls)

        assert Live.value == 1
        assert Live.value == 2
        assert Live().value == 3

    def test_lazy_per_class(self):
        class Base:
            @classproperty(lazy=True)
            def name(cls):
                return cls.__name__

        class Derived(Base):
            pass

        assert Base.name == 'Base'
        assert Derived.name == 'Derived'
        assert Base.__dict__['name'].__doc__ is None
