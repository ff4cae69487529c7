from django import forms

from .arith import is_squarefree
from .criteria import FORMS


class SearchForm(forms.Form):
    """Search bounds shared by every command that runs the rank engine."""
    DESCENT_CHOICES = [('on', 'On'), ('off', 'Off')]
    height = forms.IntegerField(min_value=1)
    box = forms.IntegerField(min_value=1)
    descent = forms.ChoiceField(choices=DESCENT_CHOICES, initial='on')
    cache = forms.CharField(required=False)
    workers = forms.IntegerField(min_value=1)

    def clean(self):
        cleaned = super().clean()
        if cleaned.get('cache') and cleaned.get('descent') == 'off':
            raise forms.ValidationError('The rank cache is only used with --descent on.')
        return cleaned


class ClassifyForm(SearchForm):
    d = forms.IntegerField()

    def clean_d(self):
        d = self.cleaned_data.get('d')
        if d == 0:
            raise forms.ValidationError('d must be a nonzero integer.')
        return d


class FindApForm(SearchForm):
    d = forms.IntegerField()

    def clean_d(self):
        d = self.cleaned_data.get('d')
        if d in (0, 1) or not is_squarefree(d):
            raise forms.ValidationError('d must be squarefree and different from 0 and 1.')
        return d


class ThetaForm(SearchForm):
    ANGLE_CHOICES = [('pi/3', 'pi/3'), ('2pi/3', '2pi/3')]
    n = forms.IntegerField(min_value=1)
    angle = forms.ChoiceField(choices=ANGLE_CHOICES)

    def clean_n(self):
        n = self.cleaned_data.get('n')
        if not is_squarefree(n):
            raise forms.ValidationError('n must be squarefree.')
        return n


class TableForm(SearchForm):
    pmax = forms.IntegerField(min_value=5)
    export = forms.CharField(required=False)

    def clean_export(self):
        path = self.cleaned_data.get('export')
        if path and not path.endswith('.xlsx'):
            raise forms.ValidationError('The export path must end in .xlsx.')
        return path


class ThueForm(forms.Form):
    dmax = forms.IntegerField(min_value=1)
    box = forms.IntegerField(min_value=1)


class FormsCountForm(forms.Form):
    form_id = forms.ChoiceField(choices=[(key, key) for key in FORMS])
    n = forms.IntegerField(min_value=1)
