#pragma once

namespace semiord {

enum class Cmp { Less, Equal, Greater };

}  // namespace semiord
