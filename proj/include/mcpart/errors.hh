#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcpart
{
    /// Malformed graph input.
    class ParseError : public std::runtime_error
    {
        private:
            std::size_t _line;

        public:
            ParseError(std::size_t line, const std::string & message) :
                std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
                _line(line)
            {
            }

            /// 1-based input line, or 0 when the error is not tied to a line.
            auto line() const -> std::size_t
            {
                return _line;
            }
    };

    /// An internal consistency check failed; indicates a bug, not bad input.
    class InvariantError : public std::logic_error
    {
        public:
            using std::logic_error::logic_error;
    };

    /// The brute-force oracle was asked for more leaves than its cap allows.
    class SizeLimitError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };
}
