from textwrap import dedent
from setuptools import setup

setup(
    version='1.0.0',
    name='chordx',
    description='Linear resolutions of square-free monomial ideals via chorded simplicial complexes.',
    long_description=dedent('''\
        Decides whether square-free monomial ideals have linear resolutions over fields of characteristic 2, both
        via the homology of induced subcomplexes and via the chordality of their Stanley-Reisner complexes.
        '''),
    long_description_content_type='text/markdown',
    license='MIT',
    install_requires=['clingo', 'numpy', 'networkx>=3.1'],
    extras_require={'test': ['hypothesis']},
    packages=['chordx', 'chordx.tests'],
    package_data={'chordx': ['py.typed']},
    entry_points={'console_scripts': ['chordx=chordx.cli:main']},
    zip_safe=False,
    python_requires=">=3.8"
)
