#include <openssl/evp.h>

#include <fstream>
#include <sstream>

#include "cda/catalog.hpp"
#include "doctest.h"

using namespace cda;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "cannot open " << path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) {
    static const char* hex = "0123456789abcdef";
    os << hex[digest[i] >> 4] << hex[digest[i] & 0xF];
  }
  return os.str();
}

}  // namespace

TEST_CASE("shipped seed files match the embedded catalog byte for byte") {
  for (const SeedInfo& info : catalog_list()) {
    const std::string path = std::string(CDA_SEED_DATA_DIR) + "/" + info.name + ".txt";
    CHECK_MESSAGE(read_file(path) == catalog_seed_text(info.name), info.name);
  }
}

TEST_CASE("seed files match their recorded checksums") {
  const std::string sums = read_file(std::string(CDA_SEED_DATA_DIR) + "/SHA256SUMS");
  std::istringstream lines(sums);
  std::string line;
  int checked = 0;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string hash, filename;
    fields >> hash >> filename;
    REQUIRE(hash.size() == 64);
    const std::string body = read_file(std::string(CDA_SEED_DATA_DIR) + "/" + filename);
    CHECK_MESSAGE(sha256_hex(body) == hash, filename);
    ++checked;
  }
  CHECK(checked == static_cast<int>(catalog_list().size()));
}
