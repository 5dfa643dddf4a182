abstract class Abstract10 extends Abstract7 {
}
