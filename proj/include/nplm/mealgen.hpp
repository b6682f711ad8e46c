#ifndef NPLM_MEALGEN_HPP
#define NPLM_MEALGEN_HPP

#include <array>
#include <string>
#include <vector>

namespace nplm {

// Nutrients are grams except calories (kcal). Each template carries a
// menu-style short description and a verbose free-living one; the generator
// samples portion size and per-nutrient jitter around the listed means.
struct MealTemplate {
  std::string head;        // one-word condensed representative
  std::string short_desc;  // controlled-cohort menu text
  std::string long_desc;   // free-living base text
  double calories, fat_g, carb_g, protein_g, fiber_g;
};

inline const std::vector<MealTemplate>& meal_templates() {
  static const std::vector<MealTemplate> t = {
      {"oatmeal", "oatmeal banana", "steel cut oatmeal with banana and honey", 350, 6, 65, 10, 8},
      {"pancakes", "buttermilk pancakes", "buttermilk pancakes with blueberries and maple syrup", 620, 18, 98, 12, 3},
      {"salad", "chicken caesar salad", "grilled chicken caesar salad with parmesan and croutons", 480, 28, 22, 38, 4},
      {"burger", "cheeseburger fries", "double cheeseburger with bacon and a side of fries", 1150, 62, 95, 48, 5},
      {"smoothie", "green smoothie", "naked green machine fruit and veggie smoothie", 270, 1, 63, 4, 3},
      {"yogurt", "greek yogurt granola", "greek yogurt parfait with granola and mixed berries", 320, 9, 42, 20, 4},
      {"eggs", "scrambled eggs toast", "scrambled eggs with spinach and whole wheat toast", 380, 20, 28, 24, 4},
      {"pizza", "pepperoni pizza", "two slices of pepperoni pizza with extra cheese", 640, 28, 70, 28, 4},
      {"sushi", "salmon sushi roll", "salmon avocado sushi roll with edamame and miso soup", 520, 16, 62, 28, 6},
      {"steak", "ribeye asparagus", "grilled ribeye steak with roasted asparagus and butter", 780, 52, 8, 62, 3},
      {"soup", "lentil soup", "hearty lentil soup with carrots kale and cumin", 340, 8, 48, 18, 13},
      {"pasta", "spaghetti meatballs", "spaghetti with marinara sauce and beef meatballs", 720, 26, 88, 32, 6},
      {"burrito", "chicken burrito bowl", "chicken burrito bowl with black beans brown rice and salsa", 690, 22, 82, 40, 12},
      {"wrap", "turkey cheddar wrap", "turkey and cheddar wrap with lettuce and chipotle mayo", 540, 24, 52, 30, 4},
      {"cookie", "protein cookie", "snickerdoodle protein cookie from the corner bakery", 240, 9, 28, 15, 2},
      {"dressing", "ranch dressing packet", "ranch dressing packet from the deli counter", 130, 13, 2, 1, 0},
      {"guacamole", "guacamole keto", "guacamole keto snack pack with lime and sea salt", 220, 20, 10, 3, 7},
      {"chicken", "orange chicken veggies", "orange chicken string bean chicken and steamed veggies", 820, 34, 86, 42, 6},
      {"nuts", "corn nuts ranch", "corn nuts ranch flavored crunchy snack bag", 310, 14, 40, 7, 3},
      {"candy", "honey salted caramel", "honey salted caramel chews from the checkout aisle", 210, 7, 37, 1, 0},
      {"vegetables", "steamed vegetables", "vegetables mixed steam bag with a little olive oil", 120, 5, 16, 4, 6},
      {"shake", "almond butter shake", "almond butter shake by life cafe with oat milk", 450, 22, 48, 16, 6},
      {"chips", "puff corn chips", "chesters puff corn cheese flavored family size", 330, 20, 34, 3, 1},
      {"sandwich", "club sandwich", "club lulu unwich with turkey bacon and provolone", 560, 30, 40, 32, 3},
      {"sausage", "breakfast sausage", "chicken and herb breakfast sausage links with apple", 290, 18, 12, 21, 2},
      {"tofu", "tofu stir fry", "crispy tofu stir fry with broccoli and sesame ginger sauce", 430, 20, 38, 26, 8},
      {"salmon", "baked salmon quinoa", "baked salmon with quinoa pilaf and green beans", 560, 24, 42, 42, 7},
      {"curry", "chickpea curry rice", "chickpea coconut curry with brown rice and cilantro", 610, 22, 84, 18, 14},
  };
  return t;
}

// Exact-match condensation rules. Seeded with the exemplar long/short pairs
// plus every generator template (both verbose and menu phrasing).
struct CondenseRule {
  std::string pattern;
  std::string representative;
};

inline const std::vector<CondenseRule>& condense_rules() {
  static const std::vector<CondenseRule> base = [] {
    std::vector<CondenseRule> r = {
        {"guacamole keto", "guacamole"},
        {"ranch dressing packet", "dressing"},
        {"orange chicken string bean chicken veggies", "chicken"},
        {"corn nuts ranch", "nuts"},
        {"naked green machine", "smoothie"},
        {"honey salted caramel", "candy"},
        {"wint o green mints", "candy"},
        {"carbcounter", "supplement"},
        {"vegetables mixed steam bag", "vegetables"},
        {"almond butter shake by life cafe", "shake"},
        {"lemon champagne vinaigrette by whats gabby", "dressing"},
        {"chesters puff corn", "chips"},
        {"turkey and cheddar wrap", "wrap"},
        {"club lulu unwich", "sandwich"},
        {"turkey bacon wranch", "wrap"},
        {"serrano pepper u goat cheese burgers", "burger"},
        {"snickerdoole protein cookie g", "cookie"},
        {"vinaigrette aged balsamic", "dressing"},
        {"chicken and herb breakfast sausage", "sausage"},
        {"old fashion", "alcohol"},
        {"buttermilk pancakes with almond milk egg", "pancakes"},
        {"smoked provolone slices.", "cheese"},
        {"deli slices oven roasted", "ham"},
    };
    for (const auto& t : meal_templates()) {
      r.push_back({t.short_desc, t.head});
      r.push_back({t.long_desc, t.head});
    }
    return r;
  }();
  return base;
}

// Extra tokens occasionally appended to free-living descriptions so the
// verbose cohort averages roughly twice the token count of the menu text.
inline const std::vector<std::string>& verbose_fillers() {
  static const std::vector<std::string> f = {
      "homemade",  "leftover", "large portion", "small portion",
      "from the cafe", "extra sauce", "and iced tea", "and sparkling water",
      "with a side salad", "takeout",
  };
  return f;
}

}  // namespace nplm

#endif  // NPLM_MEALGEN_HPP
