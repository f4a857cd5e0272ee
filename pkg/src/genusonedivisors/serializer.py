import json
import re
from fractions import Fraction

import genusonedivisors.models
from genusonedivisors.errors import FailedToDeserializeException
from genusonedivisors.utils import format_rational, to_fraction


class Serializer:
    PRIMITIVE_TYPES = (bool, str, int)
    NATIVE_TYPES_MAPPING = {
        "int": int,
        "str": str,
        "bool": bool,
        "Fraction": Fraction,
        "object": object,
    }

    def deserialize(self, payload, payload_type):
        """Deserializes a JSON payload into an object.

        :param payload: JSON text, or data that was already decoded.
        :param payload_type: class literal, or a type string such as
            "DivisorClass", "list[AgeProfile]" or "dict(str, Fraction)".

        :return: deserialized object.
        """
        try:
            data = json.loads(payload)
        except (TypeError, ValueError):
            data = payload

        return self.__deserialize(data, payload_type)

    def sanitize_for_serialization(self, obj):
        """Builds JSON-ready data.

        If obj is None, return None.
        If obj is str, int or bool, return directly.
        If obj is a Fraction, return its lowest-terms "p/q" string.
        If obj is a list or tuple, sanitize each element into a list.
        If obj is a dict, sanitize its values.
        If obj is a model, sanitize the result of its to_dict().

        :param obj: The data to serialize.
        :return: The serialized form of data.
        """
        if obj is None:
            return None
        elif isinstance(obj, self.PRIMITIVE_TYPES):
            return obj
        elif isinstance(obj, Fraction):
            return format_rational(obj)
        elif isinstance(obj, (list, tuple)):
            return [self.sanitize_for_serialization(sub_obj) for sub_obj in obj]

        if isinstance(obj, dict):
            obj_dict = obj
        elif hasattr(obj, "to_dict"):
            obj_dict = obj.to_dict()
            if not isinstance(obj_dict, dict):
                return self.sanitize_for_serialization(obj_dict)
        else:
            raise FailedToDeserializeException(f"cannot serialize object of type {type(obj).__name__}")

        return {
            str(key): self.sanitize_for_serialization(val)
            for key, val in obj_dict.items()
        }

    def dumps(self, obj, indent=None) -> str:
        return json.dumps(self.sanitize_for_serialization(obj), ensure_ascii=False, sort_keys=False, indent=indent)

    def __deserialize(self, data, klass):
        """Deserializes dict, list, str into an object.

        :param data: dict, list or str.
        :param klass: class literal, or string of class name.

        :return: object.
        """
        if data is None:
            return None

        if type(klass) == str:
            if klass.startswith("list["):
                sub_kls = re.match(r"list\[(.*)\]", klass).group(1)
                if not isinstance(data, list):
                    raise FailedToDeserializeException(f"expected a JSON array for {klass}")
                return [self.__deserialize(sub_data, sub_kls) for sub_data in data]

            if klass.startswith("dict("):
                sub_kls = re.match(r"dict\(([^,]*), (.*)\)", klass).group(2)
                if not isinstance(data, dict):
                    raise FailedToDeserializeException(f"expected a JSON object for {klass}")
                return {
                    k: self.__deserialize(v, sub_kls) for k, v in data.items()
                }

            # convert str to class
            if klass in self.NATIVE_TYPES_MAPPING:
                klass = self.NATIVE_TYPES_MAPPING[klass]
            else:
                try:
                    klass = getattr(genusonedivisors.models, klass)
                except AttributeError:
                    raise FailedToDeserializeException(f"unknown type {klass!r}")

        if klass in self.PRIMITIVE_TYPES:
            return self.__deserialize_primitive(data, klass)
        elif klass == Fraction:
            return self.__deserialize_fraction(data)
        elif klass == object:
            return data
        else:
            return self.__deserialize_model(data, klass)

    def __deserialize_primitive(self, data, klass):
        try:
            return klass(data)
        except (TypeError, ValueError):
            raise FailedToDeserializeException(f"failed to parse {data!r} as {klass.__name__}")

    def __deserialize_fraction(self, data):
        try:
            return to_fraction(data)
        except (TypeError, ValueError, ZeroDivisionError):
            raise FailedToDeserializeException(f"failed to parse {data!r} as a rational")

    def __deserialize_model(self, data, klass):
        """Deserializes list or dict to model through its from_dict.

        Models that serialize as a bare list (Signature, Permutation) are
        rebuilt from that list.
        """
        try:
            if hasattr(klass, "from_dict"):
                return klass.from_dict(data)
            if isinstance(data, list):
                return klass(tuple(data))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as error:
            raise FailedToDeserializeException(f"failed to deserialize {klass.__name__}: {error}")
        raise FailedToDeserializeException(f"{klass.__name__} cannot be built from {type(data).__name__}")
