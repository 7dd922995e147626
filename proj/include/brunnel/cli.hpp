#pragma once

// The `brunnel` command line: subcommand dispatch over the library.

#include <istream>
#include <string>
#include <vector>

#include "brunnel/diagram.hpp"
#include "brunnel/grouppres.hpp"
#include "brunnel/jsj.hpp"
#include "brunnel/surface.hpp"

namespace brunnel {

struct CommandResult {
  // 0 on success, 1 for library errors, 2 for usage errors.
  int exit_code = 0;
  std::string out;
  std::vector<std::string> diagnostics;
};

// args excludes the program name. `-` as an input path reads `in`.
CommandResult run(const std::vector<std::string>& args, std::istream& in);

namespace cli {

// "-" reads the stream, an existing file is read whole, anything else is
// taken as literal text. An empty source reads the stream.
std::string read_source(const std::string& source, std::istream& in);

// Accepts DT codes, PD codes, diagram or DT JSON, and catalog names. In
// multi-line text the first line that looks like a code wins.
LinkDiagram parse_diagram_input(const std::string& text);

// `<x1, x2 | x1 X2, X1 x2 x1>`; generators must be named x1..xn in order.
GroupPresentation parse_presentation(const std::string& text);

JsjTree parse_jsj_input(const std::string& text);
// A base name or a descriptor JSON document.
SurfaceLinkDescriptor parse_descriptor_input(const std::string& text);

}  // namespace cli

}  // namespace brunnel
