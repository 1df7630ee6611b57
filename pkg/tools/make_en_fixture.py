"""Emit the English golden-rule fixture as JSONL."""

import json
import sys

RULES = [
    ("period ends sentence", "Hello World. My name is Jonas.", ["Hello World.", "My name is Jonas."]),
    ("question mark ends sentence", "What is your name? My name is Jonas.", ["What is your name?", "My name is Jonas."]),
    ("exclamation point ends sentence", "There it is! I found it.", ["There it is!", "I found it."]),
    ("single-letter initial mid sentence", "My name is Jonas E. Smith.", ["My name is Jonas E. Smith."]),
    ("single-letter lowercase abbreviation before number", "Please turn to p. 55.", ["Please turn to p. 55."]),
    ("two-letter lowercase abbreviation mid sentence", "Were Jane and co. at the party?", ["Were Jane and co. at the party?"]),
    ("two-letter capitalized abbreviation mid sentence", "They closed the deal with Pitt, Briggs & Co. at noon.", ["They closed the deal with Pitt, Briggs & Co. at noon."]),
    ("two-letter lowercase abbreviation at sentence end", "Let's ask Jane and co. They should know.", ["Let's ask Jane and co.", "They should know."]),
    ("two-letter capitalized abbreviation at sentence end", "They closed the deal with Pitt, Briggs & Co. It closed yesterday.", ["They closed the deal with Pitt, Briggs & Co.", "It closed yesterday."]),
    ("prepositive abbreviation", "I can see Mt. Fuji from here.", ["I can see Mt. Fuji from here."]),
    ("prepositive and postpositive abbreviation", "St. Michael's Church is on 5th st. near the light.", ["St. Michael's Church is on 5th st. near the light."]),
    ("possessive abbreviation", "That is JFK Jr.'s book.", ["That is JFK Jr.'s book."]),
    ("dotted acronym mid sentence", "I visited the U.S.A. last year.", ["I visited the U.S.A. last year."]),
    ("dotted acronym at sentence end", "I live in the E.U. How about you?", ["I live in the E.U.", "How about you?"]),
    ("dotted country acronym at sentence end", "I live in the U.S. How about you?", ["I live in the U.S.", "How about you?"]),
    ("dotted acronym before capitalized word", "I work for the U.S. Government in Virginia.", ["I work for the U.S. Government in Virginia."]),
    ("dotted acronym mid sentence before lowercase", "I have lived in the U.S. for 20 years.", ["I have lived in the U.S. for 20 years."]),
    ("time-of-day abbreviations as boundary and non-boundary", "At 5 a.m. Mr. Smith went to the bank. He left the bank at 6 P.M. Mr. Smith then went to the store.", ["At 5 a.m. Mr. Smith went to the bank.", "He left the bank at 6 P.M.", "Mr. Smith then went to the store."]),
    ("decimal number mid sentence", "She has $100.00 in her bag.", ["She has $100.00 in her bag."]),
    ("decimal number at sentence end", "She has $100.00. It is in her bag.", ["She has $100.00.", "It is in her bag."]),
    ("parenthetical sentence inside a sentence", "He teaches science (He previously worked for 5 years as an engineer.) at the local University.", ["He teaches science (He previously worked for 5 years as an engineer.) at the local University."]),
    ("email address", "Her email is Jane.Doe@example.com. I sent her an email.", ["Her email is Jane.Doe@example.com.", "I sent her an email."]),
    ("web address", "The site is: https://www.example.50.com/new-site/awesome_content.html. Please check it out.", ["The site is: https://www.example.50.com/new-site/awesome_content.html.", "Please check it out."]),
    ("single quotation inside sentence", "She turned to him, 'This is great.' she said.", ["She turned to him, 'This is great.' she said."]),
    ("double quotation inside sentence", 'She turned to him, "This is great." she said.', ['She turned to him, "This is great." she said.']),
    ("double quotation at sentence end", 'She turned to him, "This is great." She held the book out to show him.', ['She turned to him, "This is great."', 'She held the book out to show him.']),
    ("double exclamation", "Hello!! Long time no see.", ["Hello!!", "Long time no see."]),
    ("double question mark", "Hello?? Who is there?", ["Hello??", "Who is there?"]),
    ("exclamation then question mark", "Hello!? Is that you?", ["Hello!?", "Is that you?"]),
    ("question mark then exclamation", "Hello?! Is that you?", ["Hello?!", "Is that you?"]),
    ("numeric list, dot-paren markers, no item terminals", "1.) The first item 2.) The second item", ["1.) The first item", "2.) The second item"]),
    ("numeric list, dot-paren markers, item terminals", "1.) The first item. 2.) The second item.", ["1.) The first item.", "2.) The second item."]),
    ("numeric list, paren markers, no item terminals", "1) The first item 2) The second item", ["1) The first item", "2) The second item"]),
    ("numeric list, paren markers, item terminals", "1) The first item. 2) The second item.", ["1) The first item.", "2) The second item."]),
    ("numeric list, dot markers, no item terminals", "1. The first item 2. The second item", ["1. The first item", "2. The second item"]),
    ("numeric list, dot markers, item terminals", "1. The first item. 2. The second item.", ["1. The first item.", "2. The second item."]),
    ("bulleted numeric list", "• 9. The first item • 10. The second item", ["• 9. The first item", "• 10. The second item"]),
    ("hyphen-bullet numeric list", "⁃9. The first item ⁃10. The second item", ["⁃9. The first item", "⁃10. The second item"]),
    ("alphabetical list", "a. The first item b. The second item c. The third list item", ["a. The first item", "b. The second item", "c. The third list item"]),
    ("dotted numeric reference", "You can find it at N°. 1026.253.553. That is where the treasure is.", ["You can find it at N°. 1026.253.553.", "That is where the treasure is."]),
    ("named entity with exclamation point", "She works at Yahoo! in the accounting department.", ["She works at Yahoo! in the accounting department."]),
    ("capital I as word and as initial", "We make a good team, you and I. Did you see Albert I. Jones yesterday?", ["We make a good team, you and I.", "Did you see Albert I. Jones yesterday?"]),
    ("spaced ellipsis at end of quotation", "Thoreau argues that by simplifying one’s life, “the laws of the universe will appear less complex. . . .”", ["Thoreau argues that by simplifying one’s life, “the laws of the universe will appear less complex. . . .”"]),
    ("bracketed ellipsis inside quotation", "\"Bohr [...] used the analogy of parallel stairways [...]\" (Smith 55).", ["\"Bohr [...] used the analogy of parallel stairways [...]\" (Smith 55)."]),
    ("spaced ellipsis plus period as boundary", "If words are left off at the end of a sentence, and that is all that is omitted, indicate the omission with ellipsis marks (preceded and followed by a space) and then indicate the end of the sentence with a period . . . . Next sentence.", ["If words are left off at the end of a sentence, and that is all that is omitted, indicate the omission with ellipsis marks (preceded and followed by a space) and then indicate the end of the sentence with a period . . . .", "Next sentence."]),
    ("four-dot ellipsis as boundary", "I never meant that.... She left the store.", ["I never meant that....", "She left the store."]),
    ("ellipsis as non boundary", "I wasn’t really ... well, what I mean...see . . . what I'm saying, the thing is . . . I didn’t mean it.", ["I wasn’t really ... well, what I mean...see . . . what I'm saying, the thing is . . . I didn’t mean it."]),
    ("sentence-final period then spaced ellipsis", "One further habit which was somewhat weakened . . . was that of combining words into self-interpreting compounds. . . . The practice was not abandoned. . . .", ["One further habit which was somewhat weakened . . . was that of combining words into self-interpreting compounds.", ". . . The practice was not abandoned. . . ."]),
]


def main() -> None:
    out = sys.stdout
    for i, (description, text, expected) in enumerate(RULES, start=1):
        record = {"id": i, "description": description, "input": text, "expected": expected}
        out.write(json.dumps(record, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main()
