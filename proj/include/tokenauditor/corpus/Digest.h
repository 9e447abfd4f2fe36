// SPDX-License-Identifier: GPL-3.0

#pragma once

#include <string>
#include <string_view>

namespace tokenauditor::corpus
{

/// Lowercase hex SHA-256 of @a _data.
std::string sha256Hex(std::string_view _data);
/// "sha256:<hex>" as stored in reports.
std::string inputDigest(std::string_view _content);

}
