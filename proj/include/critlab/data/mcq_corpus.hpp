// Generated by tools/embed_data.py from data/mcq_corpus.jsonl. Do not edit.
#pragma once

#include <string_view>

namespace critlab::data {

inline constexpr std::string_view kMcqCorpus = R"critlab({"passage": "Every spring, the town of Alderby holds a lantern festival. This year the event was organized by Mira, who works as a gardener. Mira spent weeks preparing and borrowed three kites from neighbours. Eight volunteers helped on the day. Visitors said the event brought the whole town together, and Mira hopes to organize it again next year.", "questions": [{"answer_label": "B", "options": ["Autumn.", "Spring.", "Summer.", "Winter."], "stem": "When is the event in Alderby held?"}, {"answer_label": "A", "options": ["Three.", "Nine.", "Seven.", "Two."], "stem": "How many kites did Mira borrow?"}, {"answer_label": "C", "options": ["A teacher.", "A baker.", "A gardener.", "A fisher."], "stem": "What does Mira do for work?"}, {"answer_label": "A", "options": ["Eight.", "Four.", "Nine.", "Six."], "stem": "How many volunteers helped on the day?"}]}
{"passage": "Every spring, the town of Brookmere holds a poetry evening. This year the event was organized by Tomas, who works as a baker. Tomas spent weeks preparing and borrowed eight bicycles from neighbours. Eight volunteers helped on the day. Visitors said the event brought the whole town together, and Tomas hopes to organize it again next year.", "questions": [{"answer_label": "B", "options": ["Summer.", "Spring.", "Autumn.", "Winter."], "stem": "When is the event in Brookmere held?"}, {"answer_label": "A", "options": ["Eight.", "Three.", "Nine.", "Five."], "stem": "How many bicycles did Tomas borrow?"}, {"answer_label": "B", "options": ["A nurse.", "A baker.", "A gardener.", "A librarian."], "stem": "What does Tomas do for work?"}, {"answer_label": "B", "options": ["Three.", "Eight.", "Six.", "Two."], "stem": "How many volunteers helped on the day?"}]}
{"passage": "Every summer, the town of Calloway holds a science fair. This year the event was organized by Ada, who works as a teacher. Ada spent weeks preparing and borrowed five loaves from neighbours. Two volunteers helped on the day. Visitors said the event brought the whole town together, and Ada hopes to organize it again next year.", "questions": [{"answer_label": "D", "options": ["Spring.", "Autumn.", "Winter.", "Summer."], "stem": "When is the event in Calloway held?"}, {"answer_label": "B", "options": ["Eight.", "Five.", "Four.", "Two."], "stem": "How many loaves did Ada borrow?"}, {"answer_label": "D", "options": ["A carpenter.", "A gardener.", "A nurse.", "A teacher."], "stem": "What does Ada do for work?"}, {"answer_label": "B", "options": ["Nine.", "Two.", "Eight.", "Four."], "stem": "How many volunteers helped on the day?"}]}
{"passage": "Every autumn, the town of Dunmore holds a bread fair. This year the event was organized by Kenji, who works as a gardener. Kenji spent weeks preparing and borrowed six posters from neighbours. Five volunteers helped on the day. Visitors said the event brought the whole town together, and Kenji hopes to organize it again next year.", "questions": [{"answer_label": "B", "options": ["Spring.", "Autumn.", "Winter.", "Summer."], "stem": "When is the event in Dunmore held?"}, {"answer_label": "D", "options": ["Two.", "Nine.", "Four.", "Six."], "stem": "How many posters did Kenji borrow?"}, {"answer_label": "D", "options": ["A painter.", "A carpenter.", "A baker.", "A gardener."], "stem": "What does Kenji do for work?"}, {"answer_label": "C", "options": ["Three.", "Eight.", "Five.", "Six."], "stem": "How many volunteers helped on the day?"}]}
{"passage": "Every autumn, the town of Eastwick holds a rowing race. This year the event was organized by Lena, who works as a nurse. Lena spent weeks preparing and borrowed nine lanterns from neighbours. Three volunteers helped on the day. Visitors said the event brought the whole town together, and Lena hopes to organize it again next year.", "questions": [{"answer_label": "A", "options": ["Autumn.", "Winter.", "Summer.", "Spring."], "stem": "When is the event in Eastwick held?"}, {"answer_label": "B", "options": ["Two.", "Nine.", "Three.", "Eight."], "stem": "How many lanterns did Lena borrow?"}, {"answer_label": "B", "options": ["A gardener.", "A nurse.", "A painter.", "A teacher."], "stem": "What does Lena do for work?"}, {"answer_label": "B", "options": ["Four.", "Three.", "Six.", "Two."], "stem": "How many volunteers helped on the day?"}]}
{"passage": "Every winter, the town of Fernhill holds a poetry evening. This year the event was organized by Omar, who works as a teacher. Omar spent weeks preparing and borrowed six lanterns from neighbours. Four volunteers helped on the day. Visitors said the event brought the whole town together, and Omar hopes to organize it again next year.", "questions": [{"answer_label": "A", "options": ["Winter.", "Autumn.", "Spring.", "Summer."], "stem": "When is the event in Fernhill held?"}, {"answer_label": "D", "options": ["Seven.", "Nine.", "Three.", "Six."], "stem": "How many lanterns did Omar borrow?"}, {"answer_label": "C", "options": ["A nurse.", "A carpenter.", "A teacher.", "A painter."], "stem": "What does Omar do for work?"}, {"answer_label": "A", "options": ["Four.", "Eight.", "Six.", "Three."], "stem": "How many volunteers helped on the day?"}]}
{"passage": "Every spring, the town of Glenrock holds a flower show. This year the event was organized by Priya, who works as a librarian. Priya spent weeks preparing and borrowed six lanterns from neighbours. Six volunteers helped on the day. Visitors said the event brought the whole town together, and Priya hopes to organize it again next year.", "questions": [{"answer_label": "B", "options": ["Autumn.", "Spring.", "Winter.", "Summer."], "stem": "When is the event in Glenrock held?"}, {"answer_label": "C", "options": ["Five.", "Eight.", "Six.", "Two."], "stem": "How many lanterns did Priya borrow?"}, {"answer_label": "A", "options": ["A librarian.", "A gardener.", "A baker.", "A fisher."], "stem": "What does Priya do for work?"}, {"answer_label": "A", "options": ["Six.", "Five.", "Nine.", "Three."], "stem": "How many volunteers helped on the day?"}]}
{"passage": "Every autumn, the town of Harwell holds a science fair. This year the event was organized by Jonah, who works as a baker. Jonah spent weeks preparing and borrowed six bicycles from neighbours. Seven volunteers helped on the day. Visitors said the event brought the whole town together, and Jonah hopes to organize it again next year.", "questions": [{"answer_label": "C", "options": ["Spring.", "Winter.", "Autumn.", "Summer."], "stem": "When is the event in Harwell held?"}, {"answer_label": "B", "options": ["Four.", "Six.", "Two.", "Five."], "stem": "How many bicycles did Jonah borrow?"}, {"answer_label": "C", "options": ["A fisher.", "A teacher.", "A baker.", "A carpenter."], "stem": "What does Jonah do for work?"}, {"answer_label": "D", "options": ["Two.", "Four.", "Five.", "Seven."], "stem": "How many volunteers helped on the day?"}]}
{"passage": "Every summer, the town of Ivybridge holds a poetry evening. This year the event was organized by Sofia, who works as a carpenter. Sofia spent weeks preparing and borrowed three lanterns from neighbours. Five volunteers helped on the day. Visitors said the event brought the whole town together, and Sofia hopes to organize it again next year.", "questions": [{"answer_label": "B", "options": ["Winter.", "Summer.", "Autumn.", "Spring."], "stem": "When is the event in Ivybridge held?"}, {"answer_label": "D", "options": ["Six.", "Two.", "Four.", "Three."], "stem": "How many lanterns did Sofia borrow?"}, {"answer_label": "A", "options": ["A carpenter.", "A gardener.", "A painter.", "A baker."], "stem": "What does Sofia do for work?"}, {"answer_label": "B", "options": ["Six.", "Five.", "Eight.", "Three."], "stem": "How many volunteers helped on the day?"}]}
{"passage": "Every autumn, the town of Juniper Falls holds a poetry evening. This year the event was organized by Emeka, who works as a gardener. Emeka spent weeks preparing and borrowed eight kites from neighbours. Two volunteers helped on the day. Visitors said the event brought the whole town together, and Emeka hopes to organize it again next year.", "questions": [{"answer_label": "A", "options": ["Autumn.", "Spring.", "Winter.", "Summer."], "stem": "When is the event in Juniper Falls held?"}, {"answer_label": "D", "options": ["Nine.", "Five.", "Three.", "Eight."], "stem": "How many kites did Emeka borrow?"}, {"answer_label": "D", "options": ["A carpenter.", "A teacher.", "A nurse.", "A gardener."], "stem": "What does Emeka do for work?"}, {"answer_label": "B", "options": ["Six.", "Two.", "Nine.", "Eight."], "stem": "How many volunteers helped on the day?"}]}
{"passage": "Every autumn, the town of Kestrel Bay holds a lantern festival. This year the event was organized by Hana, who works as a teacher. Hana spent weeks preparing and borrowed seven bicycles from neighbours. Nine volunteers helped on the day. Visitors said the event brought the whole town together, and Hana hopes to organize it again next year.", "questions": [{"answer_label": "B", "options": ["Spring.", "Autumn.", "Summer.", "Winter."], "stem": "When is the event in Kestrel Bay held?"}, {"answer_label": "B", "options": ["Nine.", "Seven.", "Two.", "Three."], "stem": "How many bicycles did Hana borrow?"}, {"answer_label": "B", "options": ["A painter.", "A teacher.", "A nurse.", "A librarian."], "stem": "What does Hana do for work?"}, {"answer_label": "D", "options": ["Seven.", "Six.", "Three.", "Nine."], "stem": "How many volunteers helped on the day?"}]}
{"passage": "Every spring, the town of Larkspur holds a poetry evening. This year the event was organized by Felix, who works as a teacher. Felix spent weeks preparing and borrowed seven posters from neighbours. Eight volunteers helped on the day. Visitors said the event brought the whole town together, and Felix hopes to organize it again next year.", "questions": [{"answer_label": "A", "options": ["Spring.", "Autumn.", "Summer.", "Winter."], "stem": "When is the event in Larkspur held?"}, {"answer_label": "C", "options": ["Two.", "Four.", "Seven.", "Six."], "stem": "How many posters did Felix borrow?"}, {"answer_label": "A", "options": ["A teacher.", "A librarian.", "A painter.", "A nurse."], "stem": "What does Felix do for work?"}, {"answer_label": "A", "options": ["Eight.", "Six.", "Nine.", "Seven."], "stem": "How many volunteers helped on the day?"}]}
{"passage": "Every spring, the town of Millbrook holds a science fair. This year the event was organized by Rosa, who works as a gardener. Rosa spent weeks preparing and borrowed nine loaves from neighbours. Six volunteers helped on the day. Visitors said the event brought the whole town together, and Rosa hopes to organize it again next year.", "questions": [{"answer_label": "C", "options": ["Autumn.", "Winter.", "Spring.", "Summer."], "stem": "When is the event in Millbrook held?"}, {"answer_label": "A", "options": ["Nine.", "Four.", "Five.", "Eight."], "stem": "How many loaves did Rosa borrow?"}, {"answer_label": "D", "options": ["A teacher.", "A carpenter.", "A fisher.", "A gardener."], "stem": "What does Rosa do for work?"}, {"answer_label": "A", "options": ["Six.", "Four.", "Two.", "Nine."], "stem": "How many volunteers helped on the day?"}]}
{"passage": "Every winter, the town of Northgate holds a chess tournament. This year the event was organized by Ivan, who works as a painter. Ivan spent weeks preparing and borrowed five chairs from neighbours. Eight volunteers helped on the day. Visitors said the event brought the whole town together, and Ivan hopes to organize it again next year.", "questions": [{"answer_label": "B", "options": ["Summer.", "Winter.", "Spring.", "Autumn."], "stem": "When is the event in Northgate held?"}, {"answer_label": "B", "options": ["Four.", "Five.", "Two.", "Eight."], "stem": "How many chairs did Ivan borrow?"}, {"answer_label": "B", "options": ["A librarian.", "A painter.", "A carpenter.", "A fisher."], "stem": "What does Ivan do for work?"}, {"answer_label": "D", "options": ["Two.", "Nine.", "Five.", "Eight."], "stem": "How many volunteers helped on the day?"}]}
{"passage": "Every autumn, the town of Oakhurst holds a poetry evening. This year the event was organized by Nadia, who works as a carpenter. Nadia spent weeks preparing and borrowed four posters from neighbours. Nine volunteers helped on the day. Visitors said the event brought the whole town together, and Nadia hopes to organize it again next year.", "questions": [{"answer_label": "D", "options": ["Winter.", "Summer.", "Spring.", "Autumn."], "stem": "When is the event in Oakhurst held?"}, {"answer_label": "C", "options": ["Nine.", "Six.", "Four.", "Eight."], "stem": "How many posters did Nadia borrow?"}, {"answer_label": "D", "options": ["A painter.", "A nurse.", "A teacher.", "A carpenter."], "stem": "What does Nadia do for work?"}, {"answer_label": "A", "options": ["Nine.", "Five.", "Seven.", "Six."], "stem": "How many volunteers helped on the day?"}]}
{"passage": "Every winter, the town of Pinecrest holds a lantern festival. This year the event was organized by Leo, who works as a carpenter. Leo spent weeks preparing and borrowed four posters from neighbours. Two volunteers helped on the day. Visitors said the event brought the whole town together, and Leo hopes to organize it again next year.", "questions": [{"answer_label": "C", "options": ["Spring.", "Summer.", "Winter.", "Autumn."], "stem": "When is the event in Pinecrest held?"}, {"answer_label": "B", "options": ["Three.", "Four.", "Eight.", "Six."], "stem": "How many posters did Leo borrow?"}, {"answer_label": "B", "options": ["A gardener.", "A carpenter.", "A painter.", "A fisher."], "stem": "What does Leo do for work?"}, {"answer_label": "A", "options": ["Two.", "Eight.", "Nine.", "Three."], "stem": "How many volunteers helped on the day?"}]}
{"passage": "Every summer, the town of Queensford holds a film night. This year the event was organized by Grace, who works as a teacher. Grace spent weeks preparing and borrowed five boats from neighbours. Two volunteers helped on the day. Visitors said the event brought the whole town together, and Grace hopes to organize it again next year.", "questions": [{"answer_label": "C", "options": ["Spring.", "Autumn.", "Summer.", "Winter."], "stem": "When is the event in Queensford held?"}, {"answer_label": "D", "options": ["Eight.", "Seven.", "Nine.", "Five."], "stem": "How many boats did Grace borrow?"}, {"answer_label": "B", "options": ["A painter.", "A teacher.", "A baker.", "A nurse."], "stem": "What does Grace do for work?"}, {"answer_label": "C", "options": ["Six.", "Five.", "Two.", "Seven."], "stem": "How many volunteers helped on the day?"}]}
{"passage": "Every winter, the town of Riverton holds a rowing race. This year the event was organized by Yusuf, who works as a teacher. Yusuf spent weeks preparing and borrowed five loaves from neighbours. Eight volunteers helped on the day. Visitors said the event brought the whole town together, and Yusuf hopes to organize it again next year.", "questions": [{"answer_label": "D", "options": ["Spring.", "Autumn.", "Summer.", "Winter."], "stem": "When is the event in Riverton held?"}, {"answer_label": "B", "options": ["Seven.", "Five.", "Eight.", "Nine."], "stem": "How many loaves did Yusuf borrow?"}, {"answer_label": "B", "options": ["A gardener.", "A teacher.", "A painter.", "A librarian."], "stem": "What does Yusuf do for work?"}, {"answer_label": "D", "options": ["Seven.", "Four.", "Three.", "Eight."], "stem": "How many volunteers helped on the day?"}]}
{"passage": "Every autumn, the town of Stonebridge holds a flower show. This year the event was organized by Clara, who works as a carpenter. Clara spent weeks preparing and borrowed seven bicycles from neighbours. Three volunteers helped on the day. Visitors said the event brought the whole town together, and Clara hopes to organize it again next year.", "questions": [{"answer_label": "A", "options": ["Autumn.", "Winter.", "Spring.", "Summer."], "stem": "When is the event in Stonebridge held?"}, {"answer_label": "B", "options": ["Eight.", "Seven.", "Three.", "Four."], "stem": "How many bicycles did Clara borrow?"}, {"answer_label": "C", "options": ["A librarian.", "A teacher.", "A carpenter.", "A baker."], "stem": "What does Clara do for work?"}, {"answer_label": "B", "options": ["Two.", "Three.", "Seven.", "Five."], "stem": "How many volunteers helped on the day?"}]}
{"passage": "Every summer, the town of Thornbury holds a music week. This year the event was organized by Mateo, who works as a gardener. Mateo spent weeks preparing and borrowed six tickets from neighbours. Five volunteers helped on the day. Visitors said the event brought the whole town together, and Mateo hopes to organize it again next year.", "questions": [{"answer_label": "A", "options": ["Summer.", "Winter.", "Spring.", "Autumn."], "stem": "When is the event in Thornbury held?"}, {"answer_label": "D", "options": ["Four.", "Three.", "Nine.", "Six."], "stem": "How many tickets did Mateo borrow?"}, {"answer_label": "A", "options": ["A gardener.", "A librarian.", "A carpenter.", "A teacher."], "stem": "What does Mateo do for work?"}, {"answer_label": "B", "options": ["Seven.", "Five.", "Six.", "Eight."], "stem": "How many volunteers helped on the day?"}]}
)critlab";

}  // namespace critlab::data
