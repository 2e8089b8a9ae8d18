# MIT License
#
# Copyright (c) 2017 Matt Boyer
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

import importlib.resources
import os
import yaml

from . import _LOGGER
from . import USER_YAML_PATH, BUILTIN_YAML
from .refine import Mask, mask_normalize
from .scalar import ExactScalar

# The C loader is only there when PyYAML was built against libyaml
_YAML_LOADER = getattr(yaml, 'CSafeLoader', yaml.SafeLoader)


def _coefficient(raw):
    if isinstance(raw, (list, tuple)):
        if len(raw) != 2:
            raise ValueError(
                "Complex coefficients are [re, im] pairs, got {!r}".format(raw)
            )
        return ExactScalar(str(raw[0]), str(raw[1]))
    if isinstance(raw, str):
        return ExactScalar.coerce(raw)
    return ExactScalar(str(raw))


class CatalogMask(object):
    def __init__(self, name, coefficients, description=None):
        self._name = name
        self._description = description or ''
        self._coefficients = tuple(_coefficient(c) for c in coefficients)
        if not self._coefficients:
            raise ValueError("Mask \"{}\" has no coefficients".format(name))

    def __repr__(self):
        return "<Catalog mask \"{0}\" ({1} coefficients)>".format(
            self._name, len(self._coefficients)
        )

    @property
    def name(self):
        return self._name

    @property
    def description(self):
        return self._description

    @property
    def coefficients(self):
        return self._coefficients

    def mask(self, normalize=False):
        coefficients = self._coefficients
        if normalize:
            coefficients = mask_normalize(coefficients)
        return Mask(coefficients)


class MaskRegistry(dict):

    def __init__(self):
        super().__init__()

    def _load_from_yaml(self, yaml_string, origin):
        if isinstance(yaml_string, bytes):
            yaml_string = yaml_string.decode('utf-8')

        raw_yaml = yaml.load(yaml_string, Loader=_YAML_LOADER) or {}
        if not isinstance(raw_yaml, dict):
            raise yaml.YAMLError(
                "{} is not a mapping of mask names".format(origin)
            )
        for mask_name, mask_props in raw_yaml.items():
            try:
                entry = CatalogMask(
                    mask_name,
                    mask_props['coefficients'],
                    description=mask_props.get('description'),
                )
            except (KeyError, TypeError, ValueError) as ex:
                _LOGGER.warning(
                    "Skipping mask \"%s\" in %s: %s", mask_name, origin, ex
                )
                continue
            if mask_name in self:
                _LOGGER.debug("%s overrides mask \"%s\"", origin, mask_name)
            self[mask_name] = entry
            _LOGGER.debug("Loaded mask \"%s\" from %s", mask_name, origin)

    def load_masks(self, user_path=USER_YAML_PATH):
        builtin = importlib.resources.files(__package__).joinpath(BUILTIN_YAML)
        try:
            self._load_from_yaml(builtin.read_bytes(), 'builtin catalog')
        except (AttributeError, yaml.YAMLError) as ex:
            raise SystemError("Malformed builtin mask catalog") from ex

        if not user_path or not os.path.exists(user_path):
            return
        # A broken user catalog leaves the builtin masks usable
        try:
            with open(user_path, 'r', encoding='UTF8') as user_yaml:
                self._load_from_yaml(user_yaml.read(), user_path)
        except (UnicodeDecodeError, yaml.YAMLError) as ex:
            _LOGGER.warning(
                "Ignoring malformed user mask catalog %s: %s", user_path, ex
            )

    @property
    def names(self):
        for mask_name in sorted(self.keys()):
            yield mask_name

    def get_mask(self, name, normalize=False):
        if name not in self:
            raise KeyError("No mask named \"{}\" in the catalog".format(name))
        return self[name].mask(normalize=normalize)
