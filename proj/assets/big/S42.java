class S42 extends Abstract20 {
  void enter() {
    if (x8 > 0) {
      send("msg15");
      switch (event) {
        case EV1147:
          if (x0 > 0) {
            new S86();
            new S63();
            new S2();
          }
          send("msg17");
          new S32();
          new S95();
          break;
        case EV1148:
          new S15();
          break;
        case EV1149:
          switch (event) {
            case EV1150:
              send("msg6");
              new S38();
              send("msg3");
              log("note");
              break;
          }
          try {
            new S53();
            new S24();
            new Helper();
          } catch (IOException e) {
            send("msg17");
          } catch (IOException e) {
            new S84();
            new S71();
            send("msg10");
          }
          if (x9 > 0) {
            send("msg4");
            send("msg11");
            send("msg16");
            new S73();
          } else {
            send("msg16");
            new S48();
            new S47();
          }
          break;
      }
      new S90();
    }
    new S34();
    send("msg10");
    if (x0 > 0) {
      try {
        switch (event) {
          case EV1151:
            new S51();
            break;
          case EV1152:
            new S77();
            break;
        }
        send("msg17");
      } catch (IOException e) {
        send("msg12");
        new S88();
        new S42();
      } finally {
        new S4();
      }
      new S1();
    }
  }
  void exit() {
    switch (event) {
      case EV1153:
        send("msg14");
        if (x9 > 0) {
          send("msg12");
          if (x7 > 0) {
            new S8();
            new S24();
            new S33();
            new S26();
          }
          switch (event) {
            case EV1154:
              send("msg19");
              new S55();
              break;
          }
        }
        break;
    }
    new S54();
  }
  void handle() {
    new S81();
    new S56();
  }
  public void tick() {
    log("note");
  }
  void reset() {
    send("msg12");
    send("msg11");
    new Helper();
    if (x8 > 0) {
      switch (event) {
        case EV1155:
          send("msg13");
          new S54();
          if (x7 > 0) {
            new S55();
          }
          break;
        case EV1156:
          try {
            send("msg0");
            send("msg5");
          } catch (IOException e) {
            new S4();
            send("msg8");
          } finally {
            new S74();
            send("msg7");
          }
          log("note");
          new S72();
          send("msg0");
          break;
      }
      send("msg2");
      try {
        new S60();
      } catch (IOException e) {
        try {
          new S95();
        } catch (IOException e) {
          new S4();
          new S82();
        } catch (IOException e) {
          new S14();
          send("msg11");
        }
        new S46();
      }
    } else {
      log("note");
      new S4();
      new S27();
      new S81();
    }
  }
  public void open() {
    log("note");
    send("msg16");
    new S74();
  }
  void close() {
    send("msg4");
    switch (event) {
      case EV1157:
        if (x9 > 0) {
          send("msg3");
          new S45();
          new S78();
        } else {
          new S29();
          log("note");
          try {
            new S6();
            new S80();
            send("msg11");
          } finally {
            new S64();
            new S73();
            send("msg8");
          }
          if (x1 > 0) {
            send("msg8");
          } else {
            new S73();
            send("msg12");
            send("msg13");
            log("note");
          }
        }
        send("msg12");
        new S4();
        if (x9 > 0) {
          new S85();
          log("note");
          new S86();
        }
        break;
      case EV1158:
        send("msg3");
        try {
          switch (event) {
            case EV1159:
              new S53();
              new S93();
              new Helper();
              send("msg16");
              break;
            case EV1160:
              new S18();
              new State();
              break;
          }
        } catch (IOException e) {
          try {
            new S56();
            new S81();
            new S98();
          } catch (TimeoutException e) {
            log("note");
            send("msg2");
            new State();
            new State();
          } catch (TimeoutException e) {
            send("msg19");
            log("note");
            new S40();
          }
        } catch (IllegalStateException e) {
          new S12();
          new S37();
        }
        break;
    }
    send("msg1");
    send("msg17");
  }
  void start() {
    new S41();
    switch (event) {
      case EV1161:
        try {
          new S84();
          switch (event) {
            case EV1162:
              send("msg19");
              new S97();
              new S38();
              new S70();
              break;
            case EV1163:
              new S14();
              new S42();
              send("msg14");
              new S77();
              break;
          }
          new Helper();
          send("msg15");
        } finally {
          new S44();
          new S75();
          switch (event) {
            case EV1164:
              log("note");
              break;
          }
        }
        try {
          new S66();
          send("msg13");
          send("msg4");
          new S99();
        } catch (TimeoutException e) {
          send("msg1");
        } finally {
          new S46();
          new S52();
        }
        break;
      case EV1165:
        try {
          new S68();
          new S46();
        } catch (IllegalStateException e) {
          new S46();
          if (x1 > 0) {
            new State();
            log("note");
            send("msg5");
            log("note");
          } else {
            new S79();
            send("msg7");
          }
          switch (event) {
            case EV1166:
              send("msg11");
              send("msg9");
              new S93();
              break;
            case EV1167:
              send("msg1");
              break;
          }
        } catch (IOException e) {
          send("msg14");
          if (x9 > 0) {
            new S14();
          } else {
            send("msg1");
            send("msg17");
          }
          switch (event) {
            case EV1168:
              new S57();
              send("msg6");
              send("msg18");
              break;
            case EV1169:
              send("msg4");
              break;
          }
        }
        break;
    }
  }
  void stop() {
    try {
      send("msg1");
      log("note");
    } finally {
      try {
        new S95();
      } catch (IllegalStateException e) {
        send("msg16");
        send("msg1");
      } finally {
        new S75();
        new S82();
      }
      try {
        log("note");
      } catch (IOException e) {
        new Helper();
        new S4();
        send("msg12");
        if (x7 > 0) {
          new S93();
          new S69();
          send("msg0");
          new S78();
        } else {
          new S97();
          send("msg15");
        }
      } catch (IOException e) {
        send("msg1");
        log("note");
      }
      log("note");
    }
  }
  void pause() {
    try {
      try {
        if (x1 > 0) {
          new S75();
          new State();
          send("msg8");
          new S86();
        } else {
          send("msg9");
          log("note");
          send("msg7");
        }
        switch (event) {
          case EV1170:
            send("msg19");
            new S19();
            new Helper();
            send("msg11");
            break;
        }
        if (x2 > 0) {
          new S99();
          log("note");
          new State();
          send("msg10");
        } else {
          send("msg15");
        }
        log("note");
      } catch (IllegalStateException e) {
        new S31();
        switch (event) {
          case EV1171:
            new S1();
            send("msg13");
            new Helper();
            break;
          case EV1172:
            new State();
            send("msg3");
            send("msg3");
            break;
          case EV1173:
            new S6();
            send("msg12");
            log("note");
            break;
        }
        switch (event) {
          case EV1174:
            new S2();
            new S54();
            new S83();
            break;
          case EV1175:
            new S29();
            break;
          case EV1176:
            send("msg17");
            break;
        }
        log("note");
      } finally {
        send("msg9");
        new S16();
        new S93();
      }
      try {
        send("msg17");
      } catch (IOException e) {
        if (x3 > 0) {
          send("msg9");
        }
      } catch (IOException e) {
        log("note");
      }
      try {
        try {
          send("msg3");
          new S80();
          new S16();
        } catch (IOException e) {
          new S76();
          send("msg9");
          new S73();
        } finally {
          send("msg1");
          new S48();
          send("msg15");
        }
        send("msg14");
        if (x9 > 0) {
          new S13();
          new S86();
          new S66();
        } else {
          send("msg12");
          log("note");
          new S32();
        }
      } finally {
        try {
          send("msg7");
          new S83();
          send("msg7");
        } catch (IllegalStateException e) {
          send("msg3");
          send("msg2");
          new Helper();
          new S6();
        } catch (IllegalStateException e) {
          new S77();
          send("msg14");
          send("msg7");
        }
        new S35();
        switch (event) {
          case EV1177:
            send("msg12");
            new S28();
            log("note");
            log("note");
            break;
          case EV1178:
            send("msg13");
            new S30();
            break;
          case EV1179:
            send("msg12");
            new S89();
            break;
        }
      }
      try {
        send("msg10");
      } catch (IllegalStateException e) {
        send("msg14");
        new S74();
      }
    } catch (TimeoutException e) {
      send("msg17");
      new S72();
      new Helper();
    }
  }
}
