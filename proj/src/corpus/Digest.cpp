// SPDX-License-Identifier: GPL-3.0

#include <tokenauditor/corpus/Digest.h>

#include <openssl/evp.h>

#include <memory>
#include <stdexcept>

using namespace std;

namespace tokenauditor::corpus
{

string sha256Hex(string_view _data)
{
	unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> context(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
	unsigned char digest[EVP_MAX_MD_SIZE];
	unsigned length = 0;
	if (
		!context ||
		EVP_DigestInit_ex(context.get(), EVP_sha256(), nullptr) != 1 ||
		EVP_DigestUpdate(context.get(), _data.data(), _data.size()) != 1 ||
		EVP_DigestFinal_ex(context.get(), digest, &length) != 1
	)
		throw runtime_error("SHA-256 computation failed");
	static char const hexDigits[] = "0123456789abcdef";
	string hex;
	hex.reserve(length * 2);
	for (unsigned i = 0; i < length; ++i)
	{
		hex += hexDigits[digest[i] >> 4];
		hex += hexDigits[digest[i] & 0xf];
	}
	return hex;
}

string inputDigest(string_view _content)
{
	return "sha256:" + sha256Hex(_content);
}

}
