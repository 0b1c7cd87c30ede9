#pragma once

// Seeded definition mutations used by the mutation tests. Production builds compile with 0.
//   1  is_C_major treats three consecutive hole neighbours as major
//   2  path-weight tie-break reversed
//   3  bounded hole search ignores chords to the root
//   4  three-in-a-tree accepts attachments with several path neighbours
//   5  is_K_major treats three-vertex paths of K as major
#ifndef LONGHOLE_MUTANT
#define LONGHOLE_MUTANT 0
#endif

namespace longhole {
inline constexpr int kMutant = LONGHOLE_MUTANT;
}
