#pragma once

#include <vector>

namespace unimod::detail {

// Contents of data/ compiled into the library.
struct EmbeddedFile {
  const char* name;
  const char* content;
};

const std::vector<EmbeddedFile>& embedded_files();

}  // namespace unimod::detail
