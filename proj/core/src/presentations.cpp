#include "chc/presentations.hpp"

namespace chc {

const std::vector<Presentation>& conjectured_presentations() {
  static const std::vector<Presentation> table = {
      {"s1", 3,
       {{"J", "12312312"},
        {"J", "23123123"},
        {"J", "31231231"},
        {"1^3", ""},
        {"(123)^8", ""},
        {"(12)^3", "(21)^3"},
        {"(1232')^2", "(232'1)^2"},
        {"12323'2'1", "2323'2'12323'2'"}}},
      {"s1", 4,
       {{"J", "12312312"},
        {"J", "23123123"},
        {"J", "31231231"},
        {"1^4", ""},
        {"(123)^8", ""},
        {"(12)^3", "(21)^3"},
        {"(1232')^2", "(232'1)^2"},
        {"12323'2'1", "2323'2'12323'2'"},
        {"(12)^12", ""}}},
      {"s1", 6,
       {{"J", "12312312"},
        {"J", "23123123"},
        {"J", "31231231"},
        {"1^6", ""},
        {"(123)^8", ""},
        {"(12)^3", "(21)^3"},
        {"(1232')^2", "(232'1)^2"},
        {"12323'2'1", "2323'2'12323'2'"},
        {"(12)^6", ""},
        {"(1232')^12", ""}}},
      {"s4c", 3,
       {{"J'", "1231231"},
        {"J'", "2312312"},
        {"J'", "3123123"},
        {"1^3", ""},
        {"(123)^7", ""},
        {"(12)^2", "(21)^2"}}},
      {"s4c", 4,
       {{"J'", "1231231"},
        {"J'", "2312312"},
        {"J'", "3123123"},
        {"1^4", ""},
        {"(123)^7", ""},
        {"(12)^2", "(21)^2"}}},
      {"s4c", 5,
       {{"J'", "1231231"},
        {"J'", "2312312"},
        {"J'", "3123123"},
        {"1^5", ""},
        {"(123)^7", ""},
        {"(12)^2", "(21)^2"},
        {"(12)^20", ""}}},
      {"s4c", 6,
       {{"J'", "1231231"},
        {"J'", "2312312"},
        {"J'", "3123123"},
        {"1^6", ""},
        {"(123)^7", ""},
        {"(12)^2", "(21)^2"},
        {"(12)^12", ""}}},
      {"s4c", 8,
       {{"J'", "1231231"},
        {"J'", "2312312"},
        {"J'", "3123123"},
        {"1^8", ""},
        {"(123)^7", ""},
        {"(12)^2", "(21)^2"},
        {"(12)^8", ""},
        {"(1232')^24", ""}}},
      {"s4c", 12,
       {{"J'", "1231231"},
        {"J'", "2312312"},
        {"J'", "3123123"},
        {"1^12", ""},
        {"(123)^7", ""},
        {"(12)^2", "(21)^2"},
        {"(12)^6", ""},
        {"(1232')^12", ""}}},
      {"s5", 3,
       {{"J^3", ""},
        {"J1J'", "2"},
        {"J2J'", "3"},
        {"J3J'", "1"},
        {"1^3", ""},
        {"(123)^10", ""},
        {"(12)^2", "(21)^2"},
        {"1232'1232'1", "232'1232'1232'"}}},
      {"s5", 4,
       {{"J^3", ""},
        {"J1J'", "2"},
        {"J2J'", "3"},
        {"J3J'", "1"},
        {"1^4", ""},
        {"(123)^10", ""},
        {"(12)^2", "(21)^2"},
        {"1232'1232'1", "232'1232'1232'"},
        {"(13'231'232')^12", ""}}},
  };
  return table;
}

const std::vector<CuspEntry>& conjectured_cusps() {
  static const std::vector<CuspEntry> table = {
      {"s1", 3,
       {"<1,2>",
        {"1", "2"},
        {{"1^3", ""}, {"2^3", ""}, {"(12)^3", "(21)^3"}},
        {"(12)^3"}}},
      {"s1", 4,
       {"<1,232'>",
        {"1", "232'"},
        {{"1^4", ""}, {"(232')^4", ""}, {"(1232')^2", "(232'1)^2"}},
        {"(1232')^2"}}},
      {"s1", 6,
       {"<1,2323'2'>",
        {"1", "2323'2'"},
        {{"1^6", ""},
         {"(2323'2')^6", ""},
         {"12323'2'1", "2323'2'12323'2'"}},
        {"12323'2'"}}},
      {"s1", 6,
       {"<1,3'2'323>",
        {"1", "3'2'323"},
        {{"1^6", ""},
         {"(3'2'323)^6", ""},
         {"13'2'3231", "3'2'32313'2'323"}},
        {"13'2'323"}}},
      {"s4c", 4,
       {"<1,2>",
        {"1", "2"},
        {{"1^4", ""}, {"2^4", ""}, {"(12)^2", "(21)^2"}},
        {"(12)^2"}}},
      {"s4c", 6,
       {"<1,232'>",
        {"1", "232'"},
        {{"1^6", ""}, {"(232')^6", ""}, {"1232'1", "232'1232'"}},
        {"1232'"}}},
      {"s5", 3,
       {"<232',(1J)^5>",
        {"232'", "(1J)^5"},
        {{"(232')^3", ""},
         {"((1J)^5)^6", ""},
         {"(232'(1J)^-5)^2", "((1J)^-5(232'))^2"}},
        {"(232'(1J)^-5)^2"}}},
      {"s5", 4,
       {"<1,2>",
        {"1", "2"},
        {{"1^4", ""}, {"2^4", ""}, {"(12)^2", "(21)^2"}},
        {"(12)^2"}}},
  };
  return table;
}

}  // namespace chc
