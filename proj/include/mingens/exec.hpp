#pragma once

namespace mingens {

// Every parallel kernel keeps a serial twin; tests compare the two.
enum class Exec { serial, parallel };

// Sets the OpenMP thread count when n > 0; returns the count in effect.
int set_threads(int n);

}  // namespace mingens
