#!/usr/bin/env python3
import argparse
import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from calculus import build_calculus, calculus_dump
from double import Sector
from errors import QdcError
from group import centralizer, default_section, load_group, load_section, resolve_class
from rep import resolve_irrep


def _records(dump):
    """One record per commutation rule and per d of a basis element."""
    for generator, rules in dump["comm"].items():
        for label, form in rules.items():
            yield {"kind": "comm", "generator": generator, "label": label, "form": form}
    for element, form in dump["d_gen"].items():
        yield {"kind": "d", "element": element, "form": form}


def main():
    parser = argparse.ArgumentParser(
        description="Build one calculus and dump its commutation rules and differential."
    )
    parser.add_argument("--group", required=True, help="Built-in group name or file:<path>")
    parser.add_argument("--class", dest="class_selector", help="Class representative")
    parser.add_argument("--irrep", required=True, help="Representation family or file:<path>")
    parser.add_argument("--section", help="Section override file")
    parser.add_argument(
        "--format",
        choices=["json", "jsonl"],
        default="jsonl",
        help="Output format (default: jsonl)",
    )
    parser.add_argument(
        "--output",
        help="Output file path (default: stdout)",
    )
    args = parser.parse_args()

    try:
        group = load_group(args.group)
        if args.section:
            section = load_section(args.section, group)
        elif args.class_selector:
            section = default_section(group, resolve_class(group, args.class_selector))
        else:
            print("Either --class or --section is required", file=sys.stderr)
            return 2
        cent = centralizer(group, section.basepoint)
        sector = Sector(group, section, resolve_irrep(args.irrep, cent), cent)
        dump = calculus_dump(build_calculus(sector, check_oracle=False))
    except QdcError as e:
        print(f"Error: {e}", file=sys.stderr)
        return e.exit_code

    if args.format == "json":
        output_text = json.dumps(dump, ensure_ascii=False, indent=2)
    else:
        output_text = "\n".join(json.dumps(item, ensure_ascii=False) for item in _records(dump))

    if args.output:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(output_text)
    else:
        print(output_text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
