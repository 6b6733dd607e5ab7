// Copyright 2026 The dtk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON documents: images, maps, paths, homotopies, witnesses and verdicts.
//
//   image     {"name", "n", "t", "carrier": {"kind":"finite","points":[[..],..]}
//              | {"kind":"ray"|"line","start","end","margin","period"|null}}
//   map       {"domain": image-ref, "codomain": image-ref,
//              "rule": {"kind":"table","pairs":[[[..],[..]],..]}
//                    | {"kind":"mod","l":int[,"cycle":[[..],..]]}}
//   path      {"image": image-ref, "points": [[..],..]}
//   homotopy  {"image": image-ref, "grid": [[[..],..],..], "fixed_endpoints": bool}
//
// An image-ref is an inline image object or a file name resolved against the
// directory of the referring document. All parse failures throw FormatError.

#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "dtk/covering.hpp"
#include "dtk/lifting.hpp"

namespace dtk::io {

using nlohmann::json;

json point_to_json(const Point& p);
Point point_from_json(const json& j);
// "3" or "1,2" style text.
Point parse_point(const std::string& text);

json image_to_json(const DigitalImage& img);
ImagePtr image_from_json(const json& j, const std::filesystem::path& base = {});

json curve_to_json(const CurveSpec& c);

json map_to_json(const DigitalMap& m);
DigitalMap map_from_json(const json& j, const std::filesystem::path& base = {});

json path_to_json(const KPath& p);
KPath path_from_json(const json& j, const std::filesystem::path& base = {});

json homotopy_to_json(const KHomotopy& h);
KHomotopy homotopy_from_json(const json& j, const std::filesystem::path& base = {});

json witness_to_json(const Witness& w);
Witness witness_from_json(const json& j);

json verdict_to_json(const Verdict& v);

json read_json_file(const std::filesystem::path& file);
ImagePtr load_image(const std::filesystem::path& file);
DigitalMap load_map(const std::filesystem::path& file);
KPath load_path(const std::filesystem::path& file);

}  // namespace dtk::io
