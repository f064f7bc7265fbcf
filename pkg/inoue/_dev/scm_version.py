# Try to use setuptools_scm to get the current version; this is only used
# in development installations from the git repository.

import functools
import os.path as pth

try:
    from setuptools_scm import get_version as _get_version
    from setuptools_scm.version import guess_next_version

    def _guess_next_dev(version):
        if version.exact:
            return str(version.tag)

        return version.format_with("{guessed}.dev{distance}",
                                   guessed=guess_next_version(version.tag))

    get_version = functools.partial(_get_version,
                                    root=pth.join('..', '..'),
                                    version_scheme=_guess_next_dev,
                                    relative_to=__file__)
except Exception as exc:
    raise ImportError('setuptools_scm broken or not installed') from exc
