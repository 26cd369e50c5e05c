"""Instance files and reports."""

from leonard.io.models import Expectations, FieldDescriptor, InstanceFile
from leonard.io.reports import Report, dumps, load_instance, read_json, write_instance, write_json


__all__ = [
    "Expectations",
    "FieldDescriptor",
    "InstanceFile",
    "Report",
    "dumps",
    "load_instance",
    "read_json",
    "write_instance",
    "write_json",
]
